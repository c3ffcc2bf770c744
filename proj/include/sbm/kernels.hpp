#pragma once

#include <cstdint>
#include <vector>

#include "sbm/graph.hpp"

namespace sbm::kernels {

// Data-parallel kernels used by the operators and solvers. All of them are
// deterministic for a given input irrespective of the OpenMP thread count:
// spmv and the vector updates assign each output element to exactly one
// writer, and the reductions accumulate fixed-size chunks that are combined
// in index order.

// y[i] = sum over neighbors j of x[j].
void spmv(const Graph& g, const double* x, double* y);

// Chunked deterministic reductions.
double sum(const double* x, std::int64_t n);
double dot(const double* x, const double* y, std::int64_t n);
double nrm2(const double* x, std::int64_t n);

// y += a * x
void axpy(double a, const double* x, double* y, std::int64_t n);
// x *= a
void scal(double a, double* x, std::int64_t n);

// coeffs[j] = dot(basis[j], w), one full dot per basis vector.
void project(const std::vector<std::vector<double>>& basis, const double* w,
             double* coeffs);

// w -= sum_j coeffs[j] * basis[j], parallel over entries.
void subtract_combination(const std::vector<std::vector<double>>& basis,
                          const double* coeffs, double* w);

// Plain single-threaded reference implementations, kept for testing the
// parallel kernels against.
namespace serial_ref {
void spmv(const Graph& g, const double* x, double* y);
double sum(const double* x, std::int64_t n);
double dot(const double* x, const double* y, std::int64_t n);
}  // namespace serial_ref

}  // namespace sbm::kernels
