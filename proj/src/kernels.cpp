#include "sbm/kernels.hpp"

#include <cmath>

namespace sbm::kernels {
namespace {

constexpr std::int64_t kChunk = 8192;

inline double chunk_dot(const double* x, const double* y, std::int64_t lo,
                        std::int64_t hi) {
  double acc = 0.0;
  for (std::int64_t i = lo; i < hi; ++i) {
    acc += x[i] * y[i];
  }
  return acc;
}

inline double chunk_sum(const double* x, std::int64_t lo, std::int64_t hi) {
  double acc = 0.0;
  for (std::int64_t i = lo; i < hi; ++i) {
    acc += x[i];
  }
  return acc;
}

}  // namespace

void spmv(const Graph& g, const double* x, double* y) {
  const std::int64_t n = g.n;
  const std::int64_t* offsets = g.offsets.data();
  const std::int32_t* nbr = g.neighbors.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::int64_t e = offsets[i]; e < offsets[i + 1]; ++e) {
      acc += x[nbr[e]];
    }
    y[i] = acc;
  }
}

double sum(const double* x, std::int64_t n) {
  const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
  if (nchunks <= 1) {
    return chunk_sum(x, 0, n);
  }
  std::vector<double> partial(nchunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    partial[c] = chunk_sum(x, c * kChunk, std::min(n, (c + 1) * kChunk));
  }
  double acc = 0.0;
  for (double p : partial) {
    acc += p;
  }
  return acc;
}

double dot(const double* x, const double* y, std::int64_t n) {
  const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
  if (nchunks <= 1) {
    return chunk_dot(x, y, 0, n);
  }
  std::vector<double> partial(nchunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    partial[c] = chunk_dot(x, y, c * kChunk, std::min(n, (c + 1) * kChunk));
  }
  double acc = 0.0;
  for (double p : partial) {
    acc += p;
  }
  return acc;
}

double nrm2(const double* x, std::int64_t n) { return std::sqrt(dot(x, x, n)); }

void axpy(double a, const double* x, double* y, std::int64_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scal(double a, double* x, std::int64_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    x[i] *= a;
  }
}

void project(const std::vector<std::vector<double>>& basis, const double* w,
             double* coeffs) {
  const std::int64_t k = static_cast<std::int64_t>(basis.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < k; ++j) {
    const std::vector<double>& v = basis[j];
    coeffs[j] = chunk_dot(v.data(), w, 0, static_cast<std::int64_t>(v.size()));
  }
}

void subtract_combination(const std::vector<std::vector<double>>& basis,
                          const double* coeffs, double* w) {
  if (basis.empty()) {
    return;
  }
  const std::int64_t k = static_cast<std::int64_t>(basis.size());
  const std::int64_t n = static_cast<std::int64_t>(basis.front().size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double acc = w[i];
    for (std::int64_t j = 0; j < k; ++j) {
      acc -= coeffs[j] * basis[j][i];
    }
    w[i] = acc;
  }
}

namespace serial_ref {

void spmv(const Graph& g, const double* x, double* y) {
  for (std::int64_t i = 0; i < g.n; ++i) {
    double acc = 0.0;
    for (std::int64_t e = g.offsets[i]; e < g.offsets[i + 1]; ++e) {
      acc += x[g.neighbors[e]];
    }
    y[i] = acc;
  }
}

double sum(const double* x, std::int64_t n) { return chunk_sum(x, 0, n); }

double dot(const double* x, const double* y, std::int64_t n) {
  return chunk_dot(x, y, 0, n);
}

}  // namespace serial_ref
}  // namespace sbm::kernels
