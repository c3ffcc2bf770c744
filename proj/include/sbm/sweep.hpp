#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbm/params.hpp"

namespace sbm::harness {

// One detection experiment per (delta grid point, replicate). The mean
// degree c is held fixed: cin + (q-1) cout = q c and cin - cout = delta.
struct SweepConfig {
  std::int64_t n = 20000;
  int q = 2;
  double c = 8.0;
  std::vector<double> deltas;
  int seeds_per_point = 10;
  std::uint64_t seed_base = 1;
  std::uint64_t seed_stride = 1000003;  // replicate seed = base + point*stride + replicate
  double solver_tol = 1e-8;
  std::int64_t solver_max_iter = 0;  // 0 -> solver default
  int jobs = 0;                      // 0 -> OpenMP default

  void validate() const;
  BlockParams point_params(double delta) const;
};

struct SweepRow {
  double cin = 0.0;
  double cout = 0.0;
  double delta = 0.0;
  double mean_accuracy = 0.0;
  double accuracy_stderr = 0.0;
  double mean_z1_empirical = 0.0;
  double z1_theory = 0.0;  // NaN at delta == 0
  double band_edge = 0.0;
  double expected_accuracy_theory = 0.0;
  int n_seeds = 0;
  int n_converged = 0;

  bool ok() const { return n_converged == n_seeds; }
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

// CSV with a versioned schema comment; byte-identical across reruns.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct SpectrumExperimentRow {
  double bin_center = 0.0;
  double empirical_density = 0.0;
  double theory_density = 0.0;
};

struct SpectrumExperiment {
  std::vector<SpectrumExperimentRow> rows;
  double z1_empirical = 0.0;
  double z1_theory = 0.0;  // NaN when cin == cout
  double band_edge = 0.0;
  double l1_distance = 0.0;
  bool degenerate = false;  // empty graph, no spectrum to bin
};

// Dense modularity spectrum of one sampled instance versus the closed-form
// density, excluding the leading eigenvalue. Requires n within the dense
// solver limit.
SpectrumExperiment run_spectrum_experiment(const BlockParams& params,
                                           std::uint64_t seed, int bins);

void write_spectrum_csv(std::ostream& out, const SpectrumExperiment& experiment);
std::string spectrum_summary_json(const SpectrumExperiment& experiment);

struct MomentRow {
  int m = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double theory = 0.0;
  double relative_error = 0.0;
};

// Stochastic-trace check of Tr(X^(2m)) against n c^m C_m for the centered
// operator of one sampled instance, m = 0..m_max.
std::vector<MomentRow> run_moment_check(const BlockParams& params, std::uint64_t seed,
                                        int m_max, int n_probes);

void write_moments_csv(std::ostream& out, const std::vector<MomentRow>& rows);

}  // namespace sbm::harness
