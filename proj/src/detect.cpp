#include "sbm/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sbm/linear_operator.hpp"
#include "sbm/rng.hpp"

namespace sbm {
namespace {

struct KMeansRun {
  std::vector<std::int32_t> labels;
  double wcss = std::numeric_limits<double>::infinity();
  bool valid = false;
};

double sq_dist(const double* a, const double* b, int d) {
  double acc = 0.0;
  for (int t = 0; t < d; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

// One seeded k-means pass (k-means++ init, Lloyd updates). A run that ends
// with an empty cluster is reported invalid.
KMeansRun kmeans_once(const std::vector<double>& points, std::int64_t n, int d,
                      int k, Xoshiro256pp rng) {
  KMeansRun run;
  std::vector<double> centroids(static_cast<std::size_t>(k) * d);
  std::vector<double> dist2(n, std::numeric_limits<double>::infinity());

  // k-means++ seeding.
  const auto first = static_cast<std::int64_t>(rng.uniform01() * static_cast<double>(n));
  std::copy_n(points.data() + first * d, d, centroids.data());
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double d2 = sq_dist(points.data() + i * d, centroids.data() + (c - 1) * d, d);
      dist2[i] = std::min(dist2[i], d2);
      total += dist2[i];
    }
    std::int64_t pick = 0;
    if (total > 0.0) {
      double target = rng.uniform01() * total;
      for (std::int64_t i = 0; i < n; ++i) {
        target -= dist2[i];
        if (target <= 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<std::int64_t>(rng.uniform01() * static_cast<double>(n));
    }
    std::copy_n(points.data() + pick * d, d, centroids.data() + c * d);
  }

  run.labels.assign(n, 0);
  std::vector<double> sums(static_cast<std::size_t>(k) * d);
  std::vector<std::int64_t> counts(k);
  for (int iter = 0; iter < 100; ++iter) {
    bool changed = false;
    for (std::int64_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d2 = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d2 = sq_dist(points.data() + i * d, centroids.data() + c * d, d);
        if (d2 < best_d2) {
          best_d2 = d2;
          best = c;
        }
      }
      if (run.labels[i] != best) {
        run.labels[i] = static_cast<std::int32_t>(best);
        changed = true;
      }
    }
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::int64_t i = 0; i < n; ++i) {
      counts[run.labels[i]]++;
      for (int t = 0; t < d; ++t) {
        sums[run.labels[i] * d + t] += points[i * d + t];
      }
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        run.valid = false;
        return run;
      }
      for (int t = 0; t < d; ++t) {
        centroids[c * d + t] = sums[c * d + t] / static_cast<double>(counts[c]);
      }
    }
    if (!changed) {
      break;
    }
  }

  run.wcss = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    run.wcss += sq_dist(points.data() + i * d, centroids.data() + run.labels[i] * d, d);
  }
  run.valid = true;
  return run;
}

DetectionResult from_spectrum(const Graph& g, int q, SpectrumResult spectrum,
                              const DetectOptions& opts) {
  DetectionResult result;
  result.leading_eigenvalue = spectrum.eigenvalues.front();
  result.band_edge_estimate = spectrum.eigenvalues.back();  // eigenvalue q
  result.converged = spectrum.converged;
  result.iterations = spectrum.iterations;
  result.residuals = spectrum.residuals;
  result.detected =
      result.leading_eigenvalue >
      result.band_edge_estimate + opts.separation_factor * std::fabs(result.band_edge_estimate);
  result.labels.q = q;
  result.labels.labels.assign(g.n, 0);

  if (q == 2) {
    const auto& v1 = spectrum.eigenvectors.front();
    for (std::int64_t i = 0; i < g.n; ++i) {
      result.labels.labels[i] = v1[i] >= 0.0 ? 0 : 1;
    }
    return result;
  }

  // Embed in the top q-1 eigenvectors, row i -> R^(q-1).
  const int d = q - 1;
  std::vector<double> points(static_cast<std::size_t>(g.n) * d);
  for (int c = 0; c < d; ++c) {
    const auto& v = spectrum.eigenvectors[c];
    for (std::int64_t i = 0; i < g.n; ++i) {
      points[i * d + c] = v[i];
    }
  }
  KMeansRun best;
  for (int restart = 0; restart < opts.kmeans_restarts; ++restart) {
    auto run = kmeans_once(points, g.n, d, q,
                           substream(opts.seed, stream_tag::kKMeans + restart));
    if (run.valid && run.wcss < best.wcss) {
      best = run;
    }
  }
  if (!best.valid) {
    throw std::runtime_error(
        "spectral_partition_general: k-means produced empty clusters in every restart");
  }
  result.labels.labels = std::move(best.labels);
  return result;
}

}  // namespace

DetectionResult spectral_partition_q2(const Graph& g, const DetectOptions& opts) {
  return spectral_partition_general(g, 2, opts);
}

DetectionResult spectral_partition_general(const Graph& g, int q,
                                           const DetectOptions& opts) {
  if (q < 2) {
    throw std::invalid_argument("spectral_partition_general: q must be >= 2");
  }
  if (g.m < 1) {
    throw std::invalid_argument("spectral_partition_general: graph has no edges");
  }
  if (g.n < q) {
    throw std::invalid_argument("spectral_partition_general: fewer vertices than groups");
  }
  const LinearOperator modularity = modularity_er_operator(g);
  LanczosOptions lopts;
  lopts.k = q;
  lopts.tol = opts.tol;
  lopts.max_iter = opts.max_iter;
  lopts.seed = opts.seed;
  auto spectrum = extremal_eigenpairs(modularity, lopts);
  return from_spectrum(g, q, std::move(spectrum), opts);
}

double accuracy(const Partition& inferred, const Partition& truth) {
  if (inferred.size() != truth.size()) {
    throw std::invalid_argument("accuracy: partitions have different sizes");
  }
  if (inferred.q != truth.q) {
    throw std::invalid_argument("accuracy: partitions have different group counts");
  }
  const int q = truth.q;
  if (q > 8) {
    throw std::invalid_argument("accuracy: q > 8 not supported (q! matchings)");
  }
  inferred.validate();
  truth.validate();

  std::vector<std::int64_t> confusion(static_cast<std::size_t>(q) * q, 0);
  const std::int64_t n = truth.size();
  for (std::int64_t i = 0; i < n; ++i) {
    confusion[truth.labels[i] * q + inferred.labels[i]]++;
  }
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = 0;
  do {
    std::int64_t agree = 0;
    for (int b = 0; b < q; ++b) {
      agree += confusion[perm[b] * q + b];  // inferred label b mapped to perm[b]
    }
    best = std::max(best, agree);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(n);
}

}  // namespace sbm
