#include "sbm/params.hpp"

#include <stdexcept>
#include <string>

namespace sbm {

std::vector<std::int64_t> Partition::group_sizes() const {
  std::vector<std::int64_t> sizes(q, 0);
  for (std::int32_t label : labels) {
    sizes[label]++;
  }
  return sizes;
}

void Partition::validate() const {
  if (q < 2) {
    throw std::invalid_argument("partition: q must be at least 2");
  }
  for (std::int32_t label : labels) {
    if (label < 0 || label >= q) {
      throw std::invalid_argument("partition: label " + std::to_string(label) +
                                  " outside [0, " + std::to_string(q) + ")");
    }
  }
}

PlantedModel make_planted_partition(std::int64_t n, int q, double cin, double cout) {
  if (n <= 0) {
    throw std::invalid_argument("make_planted_partition: n must be positive");
  }
  if (q < 2) {
    throw std::invalid_argument("make_planted_partition: q must be at least 2");
  }
  if (n % q != 0) {
    throw std::invalid_argument("make_planted_partition: n=" + std::to_string(n) +
                                " not divisible by q=" + std::to_string(q));
  }
  if (cin < 0.0 || cout < 0.0) {
    throw std::invalid_argument("make_planted_partition: cin and cout must be non-negative");
  }
  const double dn = static_cast<double>(n);
  if (cin / dn > 1.0) {
    throw std::invalid_argument("make_planted_partition: pin = cin/n = " +
                                std::to_string(cin / dn) + " exceeds 1");
  }
  if (cout / dn > 1.0) {
    throw std::invalid_argument("make_planted_partition: pout = cout/n = " +
                                std::to_string(cout / dn) + " exceeds 1");
  }

  PlantedModel model;
  model.params = BlockParams{n, q, cin, cout};
  model.truth.q = q;
  model.truth.labels.resize(n);
  const std::int64_t group = n / q;
  for (std::int64_t i = 0; i < n; ++i) {
    model.truth.labels[i] = static_cast<std::int32_t>(i / group);
  }
  return model;
}

double mean_degree(const BlockParams& params) {
  return (params.cin + (params.q - 1) * params.cout) / params.q;
}

}  // namespace sbm
