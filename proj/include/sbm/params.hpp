#pragma once

#include <cstdint>
#include <vector>

namespace sbm {

// Planted-partition ensemble parameters. cin and cout are the expected
// within/between degree parameters; the edge probabilities are cin/n and
// cout/n.
struct BlockParams {
  std::int64_t n = 0;
  int q = 2;
  double cin = 0.0;
  double cout = 0.0;

  double pin() const { return cin / static_cast<double>(n); }
  double pout() const { return cout / static_cast<double>(n); }
  std::int64_t group_size() const { return n / q; }
};

// Group labels in [0, q) for every vertex.
struct Partition {
  std::vector<std::int32_t> labels;
  int q = 2;

  std::int64_t size() const { return static_cast<std::int64_t>(labels.size()); }
  std::vector<std::int64_t> group_sizes() const;
  void validate() const;
};

struct PlantedModel {
  BlockParams params;
  Partition truth;
};

// Validates (n, q, cin, cout) and returns the canonical ground-truth
// partition: vertex i belongs to group i / (n/q).
PlantedModel make_planted_partition(std::int64_t n, int q, double cin, double cout);

// Expected average degree, [cin + (q-1)*cout] / q.
double mean_degree(const BlockParams& params);

}  // namespace sbm
