#include "sbm/trace_est.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sbm/kernels.hpp"
#include "sbm/rng.hpp"

namespace sbm {

TraceEstimate moment_trace_estimate(const LinearOperator& op, int m_power,
                                    int n_probes, std::uint64_t seed) {
  if (!op.symmetric) {
    throw std::invalid_argument("moment_trace_estimate: operator must be symmetric");
  }
  if (m_power < 0) {
    throw std::invalid_argument("moment_trace_estimate: m_power must be >= 0");
  }
  if (n_probes < 1) {
    throw std::invalid_argument("moment_trace_estimate: need at least one probe");
  }
  const std::int64_t n = op.n;

  std::vector<double> samples(n_probes);
  std::vector<double> z(n), y(n);
  for (int p = 0; p < n_probes; ++p) {
    auto rng = substream(seed, stream_tag::kTraceProbe + static_cast<std::uint64_t>(p));
    for (std::int64_t i = 0; i < n; ++i) {
      z[i] = rng.rademacher();
    }
    y = z;
    for (int step = 0; step < 2 * m_power; ++step) {
      std::vector<double> next(n);
      op.apply(y, next);
      y.swap(next);
    }
    samples[p] = kernels::dot(z.data(), y.data(), n);
  }

  TraceEstimate est;
  est.probes = n_probes;
  double mean = 0.0;
  for (double s : samples) {
    mean += s;
  }
  mean /= n_probes;
  est.estimate = mean;
  if (n_probes > 1) {
    double ss = 0.0;
    for (double s : samples) {
      ss += (s - mean) * (s - mean);
    }
    est.std_error = std::sqrt(ss / (n_probes - 1)) / std::sqrt(static_cast<double>(n_probes));
  }
  return est;
}

}  // namespace sbm
