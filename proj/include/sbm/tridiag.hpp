#pragma once

#include <vector>

namespace sbm {

// Eigendecomposition of a symmetric tridiagonal matrix by the implicit-shift
// QL iteration. values come back ascending. With want_vectors the full
// eigenvector matrix is accumulated (vectors[i*n + j] = component i of
// eigenvector j); with track_last_row only the last row of that matrix is
// kept, which is what Lanczos residual bounds need, at O(n^2) total cost.
struct TridiagEigen {
  std::vector<double> values;
  std::vector<double> vectors;   // n*n row-major, empty unless requested
  std::vector<double> last_row;  // length n, empty unless requested
};

TridiagEigen tridiag_eigen(std::vector<double> diag, std::vector<double> offdiag,
                           bool want_vectors, bool track_last_row = false);

}  // namespace sbm
