#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sbm/graph.hpp"
#include "sbm/params.hpp"

namespace sbm {

// Matrix-free symmetric linear operator: all solvers and estimators see
// matrices only through matvec. Operators built over a Graph hold a
// reference to it; the graph must outlive the operator.
struct LinearOperator {
  std::int64_t n = 0;
  bool symmetric = true;
  std::function<void(const double*, double*)> matvec;

  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(const std::vector<double>& x) const;
};

// (Av)_i = sum of v_j over neighbors j of i.
LinearOperator adjacency_operator(const Graph& g);

// Empirical mean edge probability 2m/n^2.
double empirical_edge_probability(const Graph& g);

// Modularity operator with Erdos-Renyi null model: Bv = Av - p*(sum_j v_j)*1.
// When p is negative the empirical default 2m/n^2 is used. The rank-1 term
// is never materialized.
LinearOperator modularity_er_operator(const Graph& g, double p = -1.0);

// Modularity operator with configuration-model null: Bv = Av - (k^T v / 2m)*k.
// Requires m >= 1.
LinearOperator modularity_cm_operator(const Graph& g);

// Centered operator X = A - <A>, with the ensemble mean taken from the
// planted parameters and partition: Xv = Av - pout*(sum v)*1
// - (pin - pout)*(per-group sums broadcast to members). For q = 2 this is
// the rank-2 mean split along the all-ones and group-sign directions.
LinearOperator centered_operator(const Graph& g, const BlockParams& params,
                                 const Partition& partition);

}  // namespace sbm
