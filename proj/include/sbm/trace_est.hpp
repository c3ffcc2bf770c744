#pragma once

#include <cstdint>

#include "sbm/linear_operator.hpp"

namespace sbm {

struct TraceEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  int probes = 0;
};

// Hutchinson estimator of Tr(Op^(2m)) with Rademacher probe vectors:
// mean over probes of z^T Op^(2m) z. Exact for m = 0. Probe p draws from
// substream(seed, p), so the result does not depend on evaluation order.
TraceEstimate moment_trace_estimate(const LinearOperator& op, int m_power,
                                    int n_probes, std::uint64_t seed);

}  // namespace sbm
