#include "sbm/dense_spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sbm/kernels.hpp"

namespace sbm {

SpectrumResult dense_full_spectrum(const LinearOperator& op, std::int64_t n_limit,
                                   bool want_vectors) {
  const std::int64_t n = op.n;
  if (n < 1) {
    throw std::invalid_argument("dense_full_spectrum: empty operator");
  }
  if (n > n_limit) {
    throw std::invalid_argument("dense_full_spectrum: dimension " + std::to_string(n) +
                                " exceeds limit " + std::to_string(n_limit));
  }

  Eigen::MatrixXd mat(n, n);
  std::vector<double> basis_vec(n, 0.0), column(n);
  for (std::int64_t j = 0; j < n; ++j) {
    basis_vec[j] = 1.0;
    op.apply(basis_vec, column);
    basis_vec[j] = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      mat(i, j) = column[i];
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(mat, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense_full_spectrum: QL iteration failed to converge");
  }

  SpectrumResult result;
  result.iterations = n;
  result.converged = true;
  result.eigenvalues.resize(n);
  for (std::int64_t i = 0; i < n; ++i) {
    result.eigenvalues[i] = solver.eigenvalues()(n - 1 - i);  // descending
  }
  if (want_vectors) {
    result.eigenvectors.resize(n);
    result.residuals.resize(n);
    for (std::int64_t j = 0; j < n; ++j) {
      std::vector<double> v(n);
      for (std::int64_t i = 0; i < n; ++i) {
        v[i] = solver.eigenvectors()(i, n - 1 - j);
      }
      std::vector<double> r(n);
      op.apply(v, r);
      kernels::axpy(-result.eigenvalues[j], v.data(), r.data(), n);
      result.residuals[j] = kernels::nrm2(r.data(), n);
      result.eigenvectors[j] = std::move(v);
    }
  }
  return result;
}

}  // namespace sbm
