#pragma once

#include <cstdint>
#include <vector>

#include "sbm/graph.hpp"
#include "sbm/lanczos.hpp"
#include "sbm/params.hpp"

namespace sbm {

// Leading eigenvalue must clear the bulk-edge proxy by this relative factor
// before a run claims detection. Calibrated against the below-threshold
// false-positive rate and the transition location; see README.
inline constexpr double kSeparationFactor = 0.05;

struct DetectOptions {
  double tol = 1e-8;
  std::int64_t max_iter = 0;  // 0 -> solver default
  std::uint64_t seed = 1;
  double separation_factor = kSeparationFactor;
  int kmeans_restarts = 10;
};

struct DetectionResult {
  Partition labels;
  double leading_eigenvalue = 0.0;
  double band_edge_estimate = 0.0;  // next computed eigenvalue, bulk-edge proxy
  bool detected = false;
  bool converged = true;
  std::int64_t iterations = 0;
  std::vector<double> residuals;
};

// Two-group spectral modularity detection: top-2 eigenpairs of the
// Erdos-Renyi-null modularity operator at the empirical edge probability;
// vertex i joins group 0 when the leading eigenvector entry is >= 0.
DetectionResult spectral_partition_q2(const Graph& g, const DetectOptions& opts = {});

// q-group generalization: embeds vertices in the top (q-1) modularity
// eigenvectors and clusters with seeded k-means (best of restarts by
// within-cluster sum of squares). For q = 2 this reduces to the sign rule
// and returns the same labels as spectral_partition_q2.
DetectionResult spectral_partition_general(const Graph& g, int q,
                                           const DetectOptions& opts = {});

// Fraction of vertices on which the partitions agree, maximized over all
// q! relabelings of `inferred`. Brute force; q <= 8.
double accuracy(const Partition& inferred, const Partition& truth);

}  // namespace sbm
