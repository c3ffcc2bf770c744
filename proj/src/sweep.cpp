#include "sbm/sweep.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "sbm/dense_spectrum.hpp"
#include "sbm/detect.hpp"
#include "sbm/histogram.hpp"
#include "sbm/io.hpp"
#include "sbm/linear_operator.hpp"
#include "sbm/sample.hpp"
#include "sbm/theory.hpp"
#include "sbm/trace_est.hpp"

namespace sbm::harness {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

BlockParams SweepConfig::point_params(double delta) const {
  // cin - cout = delta, cin + (q-1) cout = q c.
  const double cout_value = c - delta / q;
  const double cin_value = cout_value + delta;
  return BlockParams{n, q, cin_value, cout_value};
}

void SweepConfig::validate() const {
  if (n < 2 || q < 2 || n % q != 0) {
    throw std::invalid_argument("sweep: need n >= 2 divisible by q >= 2");
  }
  if (seeds_per_point < 1) {
    throw std::invalid_argument("sweep: seeds_per_point must be >= 1");
  }
  for (double delta : deltas) {
    const BlockParams p = point_params(delta);
    if (delta < 0.0 || p.cout < 0.0) {
      throw std::invalid_argument("sweep: grid point delta=" + std::to_string(delta) +
                                  " leaves cin >= cout >= 0 range");
    }
    if (p.pin() > 1.0 || p.pout() > 1.0) {
      throw std::invalid_argument("sweep: grid point delta=" + std::to_string(delta) +
                                  " pushes an edge probability above 1");
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::int64_t points = static_cast<std::int64_t>(config.deltas.size());
  const std::int64_t reps = config.seeds_per_point;
  const std::int64_t tasks = points * reps;

  std::vector<double> task_accuracy(tasks, 0.0);
  std::vector<double> task_z1(tasks, 0.0);
  std::vector<char> task_converged(tasks, 0);

#ifdef _OPENMP
  const int prev_threads = omp_get_max_threads();
  if (config.jobs > 0) {
    omp_set_num_threads(config.jobs);
  }
#endif

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < tasks; ++t) {
    const std::int64_t point = t / reps;
    const std::int64_t replicate = t % reps;
    const BlockParams params = config.point_params(config.deltas[point]);
    const auto model = make_planted_partition(params.n, params.q, params.cin, params.cout);
    const std::uint64_t seed = config.seed_base +
                               static_cast<std::uint64_t>(point) * config.seed_stride +
                               static_cast<std::uint64_t>(replicate);
    const Graph graph = sample_graph(model.params, model.truth, seed);

    DetectOptions opts;
    opts.tol = config.solver_tol;
    opts.max_iter = config.solver_max_iter;
    opts.seed = seed;
    const DetectionResult detection = params.q == 2
                                          ? spectral_partition_q2(graph, opts)
                                          : spectral_partition_general(graph, params.q, opts);
    task_accuracy[t] = accuracy(detection.labels, model.truth);
    task_z1[t] = detection.leading_eigenvalue;
    task_converged[t] = detection.converged ? 1 : 0;
  }

#ifdef _OPENMP
  if (config.jobs > 0) {
    omp_set_num_threads(prev_threads);
  }
#endif

  // Deterministic reduction in (point, replicate) order.
  std::vector<SweepRow> rows(points);
  for (std::int64_t point = 0; point < points; ++point) {
    SweepRow& row = rows[point];
    const double delta = config.deltas[point];
    const BlockParams params = config.point_params(delta);
    row.cin = params.cin;
    row.cout = params.cout;
    row.delta = delta;
    row.n_seeds = static_cast<int>(reps);
    double acc_sum = 0.0, z1_sum = 0.0;
    for (std::int64_t r = 0; r < reps; ++r) {
      const std::int64_t t = point * reps + r;
      acc_sum += task_accuracy[t];
      z1_sum += task_z1[t];
      row.n_converged += task_converged[t];
    }
    row.mean_accuracy = acc_sum / static_cast<double>(reps);
    row.mean_z1_empirical = z1_sum / static_cast<double>(reps);
    if (reps > 1) {
      double ss = 0.0;
      for (std::int64_t r = 0; r < reps; ++r) {
        const double d = task_accuracy[point * reps + r] - row.mean_accuracy;
        ss += d * d;
      }
      row.accuracy_stderr =
          std::sqrt(ss / static_cast<double>(reps - 1)) / std::sqrt(static_cast<double>(reps));
    }
    row.z1_theory = delta == 0.0 ? kNaN : theory::z1_theory(params.cin, params.cout);
    row.band_edge = params.q == 2 ? theory::band_edge(params.cin, params.cout)
                                  : 2.0 * std::sqrt(mean_degree(params));
    row.expected_accuracy_theory =
        params.q == 2 ? theory::expected_accuracy(params.cin, params.cout) : kNaN;
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "# sbm sweep csv v1\n";
  out << "cin,cout,delta,mean_accuracy,accuracy_stderr,mean_z1_empirical,"
         "z1_theory,band_edge,expected_accuracy_theory,n_seeds,status\n";
  for (const SweepRow& row : rows) {
    out << io::format_double(row.cin) << "," << io::format_double(row.cout) << ","
        << io::format_double(row.delta) << "," << io::format_double(row.mean_accuracy)
        << "," << io::format_double(row.accuracy_stderr) << ","
        << io::format_double(row.mean_z1_empirical) << ","
        << io::format_double(row.z1_theory) << "," << io::format_double(row.band_edge)
        << "," << io::format_double(row.expected_accuracy_theory) << "," << row.n_seeds
        << "," << (row.ok() ? "ok" : "solver_failed") << "\n";
  }
}

SpectrumExperiment run_spectrum_experiment(const BlockParams& params,
                                           std::uint64_t seed, int bins) {
  if (params.n > kDenseLimit) {
    throw std::invalid_argument("spectrum experiment: n exceeds dense solver limit");
  }
  if (bins < 1) {
    throw std::invalid_argument("spectrum experiment: bins must be >= 1");
  }
  const auto model = make_planted_partition(params.n, params.q, params.cin, params.cout);
  const Graph graph = sample_graph(model.params, model.truth, seed);

  SpectrumExperiment experiment;
  experiment.z1_theory =
      params.cin == params.cout ? kNaN : theory::z1_theory(params.cin, params.cout);
  experiment.band_edge = theory::band_edge(params.cin, params.cout);
  if (graph.m == 0) {
    experiment.degenerate = true;
    experiment.l1_distance = kNaN;
    return experiment;
  }

  const LinearOperator modularity = modularity_er_operator(graph);
  const SpectrumResult spectrum = dense_full_spectrum(modularity);
  experiment.z1_empirical = spectrum.eigenvalues.front();

  // All eigenvalues except the leading one, against the closed-form band.
  std::span<const double> bulk(spectrum.eigenvalues.data() + 1,
                               spectrum.eigenvalues.size() - 1);
  const double half_range = 1.2 * experiment.band_edge;
  const DensityTable hist = spectral_histogram(bulk, bins, -half_range, half_range);
  experiment.rows.resize(bins);
  double l1 = 0.0;
  for (int b = 0; b < bins; ++b) {
    auto& row = experiment.rows[b];
    row.bin_center = hist.centers[b];
    row.empirical_density = hist.density[b];
    row.theory_density =
        theory::semicircle_density_unit(hist.centers[b], params.cin, params.cout);
    l1 += std::fabs(row.empirical_density - row.theory_density) * hist.bin_width;
  }
  experiment.l1_distance = l1;
  return experiment;
}

void write_spectrum_csv(std::ostream& out, const SpectrumExperiment& experiment) {
  out << "# sbm spectrum csv v1\n";
  out << "bin_center,empirical_density,theory_density\n";
  for (const auto& row : experiment.rows) {
    out << io::format_double(row.bin_center) << ","
        << io::format_double(row.empirical_density) << ","
        << io::format_double(row.theory_density) << "\n";
  }
}

std::string spectrum_summary_json(const SpectrumExperiment& experiment) {
  nlohmann::json j;
  j["z1_empirical"] = experiment.z1_empirical;
  if (std::isnan(experiment.z1_theory)) {
    j["z1_theory"] = nullptr;
  } else {
    j["z1_theory"] = experiment.z1_theory;
  }
  j["band_edge"] = experiment.band_edge;
  if (std::isnan(experiment.l1_distance)) {
    j["L1_distance"] = nullptr;
  } else {
    j["L1_distance"] = experiment.l1_distance;
  }
  if (experiment.degenerate) {
    j["warning"] = "degenerate input: sampled graph has no edges";
  }
  return j.dump();
}

std::vector<MomentRow> run_moment_check(const BlockParams& params, std::uint64_t seed,
                                        int m_max, int n_probes) {
  if (m_max < 0 || m_max > 6) {
    throw std::invalid_argument("moment check: m_max must be in [0, 6]");
  }
  const auto model = make_planted_partition(params.n, params.q, params.cin, params.cout);
  const Graph graph = sample_graph(model.params, model.truth, seed);
  const LinearOperator centered = centered_operator(graph, model.params, model.truth);
  const double c = mean_degree(params);

  std::vector<MomentRow> rows;
  for (int m = 0; m <= m_max; ++m) {
    MomentRow row;
    row.m = m;
    const TraceEstimate est = moment_trace_estimate(centered, m, n_probes, seed);
    row.estimate = est.estimate;
    row.std_error = est.std_error;
    row.theory = static_cast<double>(params.n) * std::pow(c, m) *
                 static_cast<double>(theory::catalan(m));
    row.relative_error = std::fabs(row.estimate - row.theory) / row.theory;
    rows.push_back(row);
  }
  return rows;
}

void write_moments_csv(std::ostream& out, const std::vector<MomentRow>& rows) {
  out << "# sbm moments csv v1\n";
  out << "m,estimate,std_error,theory,relative_error\n";
  for (const auto& row : rows) {
    out << row.m << "," << io::format_double(row.estimate) << ","
        << io::format_double(row.std_error) << "," << io::format_double(row.theory)
        << "," << io::format_double(row.relative_error) << "\n";
  }
}

}  // namespace sbm::harness
