#include "sbm/linear_operator.hpp"

#include <stdexcept>

#include "sbm/kernels.hpp"

namespace sbm {

void LinearOperator::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<std::int64_t>(x.size()) != n ||
      static_cast<std::int64_t>(y.size()) != n) {
    throw std::invalid_argument("LinearOperator::apply: dimension mismatch");
  }
  matvec(x.data(), y.data());
}

std::vector<double> LinearOperator::apply(const std::vector<double>& x) const {
  std::vector<double> y(x.size());
  apply(std::span<const double>(x), std::span<double>(y));
  return y;
}

LinearOperator adjacency_operator(const Graph& g) {
  LinearOperator op;
  op.n = g.n;
  op.matvec = [&g](const double* x, double* y) { kernels::spmv(g, x, y); };
  return op;
}

double empirical_edge_probability(const Graph& g) {
  return 2.0 * static_cast<double>(g.m) /
         (static_cast<double>(g.n) * static_cast<double>(g.n));
}

LinearOperator modularity_er_operator(const Graph& g, double p) {
  if (p < 0.0) {
    p = empirical_edge_probability(g);
  }
  if (p > 1.0) {
    throw std::invalid_argument("modularity_er_operator: p outside [0, 1]");
  }
  LinearOperator op;
  op.n = g.n;
  op.matvec = [&g, p](const double* x, double* y) {
    kernels::spmv(g, x, y);
    const double shift = p * kernels::sum(x, g.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < g.n; ++i) {
      y[i] -= shift;
    }
  };
  return op;
}

LinearOperator modularity_cm_operator(const Graph& g) {
  if (g.m < 1) {
    throw std::invalid_argument("modularity_cm_operator: empty graph (2m = 0)");
  }
  LinearOperator op;
  op.n = g.n;
  const double inv_2m = 1.0 / (2.0 * static_cast<double>(g.m));
  op.matvec = [&g, inv_2m](const double* x, double* y) {
    kernels::spmv(g, x, y);
    // k^T x with fixed-order accumulation.
    double ktx = 0.0;
    {
      std::vector<double> kx(g.n);
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < g.n; ++i) {
        kx[i] = static_cast<double>(g.degrees[i]) * x[i];
      }
      ktx = kernels::sum(kx.data(), g.n);
    }
    const double scale = ktx * inv_2m;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < g.n; ++i) {
      y[i] -= scale * static_cast<double>(g.degrees[i]);
    }
  };
  return op;
}

LinearOperator centered_operator(const Graph& g, const BlockParams& params,
                                 const Partition& partition) {
  if (partition.size() != g.n || g.n != params.n) {
    throw std::invalid_argument("centered_operator: size mismatch");
  }
  const double pin = params.pin();
  const double pout = params.pout();
  const int q = params.q;
  LinearOperator op;
  op.n = g.n;
  op.matvec = [&g, &partition, pin, pout, q](const double* x, double* y) {
    kernels::spmv(g, x, y);
    const double total = kernels::sum(x, g.n);
    std::vector<double> group_sum(q, 0.0);
    for (std::int64_t i = 0; i < g.n; ++i) {
      group_sum[partition.labels[i]] += x[i];
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < g.n; ++i) {
      y[i] -= pout * total + (pin - pout) * group_sum[partition.labels[i]];
    }
  };
  return op;
}

}  // namespace sbm
