#pragma once

#include <cstdint>
#include <vector>

#include "sbm/linear_operator.hpp"

namespace sbm {

// Eigenvalues sorted descending; eigenvectors unit-norm and aligned with
// them when present. residuals[i] = ||Op v_i - z_i v_i||. On solver failure
// converged is false and the best available estimates are returned.
struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residuals;
  std::int64_t iterations = 0;
  bool converged = true;
};

struct LanczosOptions {
  int k = 1;
  double tol = 1e-8;
  std::int64_t max_iter = 0;  // 0 -> 10*sqrt(n) + 200
  std::uint64_t seed = 1;
  bool want_vectors = true;
};

// Computes the k algebraically largest eigenpairs of a symmetric operator
// by Lanczos iteration with full (two-pass classical Gram-Schmidt)
// reorthogonalization. Near-zero Krylov vectors are replaced by fresh
// seeded random directions. Deterministic given the seed.
SpectrumResult extremal_eigenpairs(const LinearOperator& op,
                                   const LanczosOptions& opts);

std::int64_t default_max_iterations(std::int64_t n);

}  // namespace sbm
