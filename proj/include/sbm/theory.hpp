#pragma once

#include <cstdint>
#include <optional>

#include "sbm/params.hpp"

namespace sbm::theory {

// Gaussian error function evaluated via the regularized incomplete gamma
// function (series for small argument, Lentz continued fraction otherwise).
// Absolute error below 1e-13 over the real line; the accuracy predictions
// depend on this, so it is implemented here rather than delegated.
double erf(double x);

// Catalan number C_m = binom(2m, m)/(m+1), exact; m <= 30 fits in 64 bits.
std::int64_t catalan(int m);

// Edge of the continuous eigenvalue band, sqrt(2(cin+cout)).
double band_edge(double cin, double cout);

// Limiting spectral density of the centered matrix at z, scaled for n
// vertices: (n/pi) * sqrt(2(cin+cout) - z^2) / (cin+cout) inside the band,
// zero outside.
double semicircle_density(double z, double cin, double cout, double n_scale);

// Per-vertex variant; integrates to 1 over the band.
double semicircle_density_unit(double z, double cin, double cout);

// Leading modularity eigenvalue, (cin-cout)/2 + (cin+cout)/(cin-cout).
// Singular at cin == cout: throws rather than returning an infinity.
double z1_theory(double cin, double cout);

// Leading-order second adjacency eigenvalue, (cin+cout)/2 + 1.
double z2_adjacency_theory(double cin, double cout);

// (cin - cout) - sqrt(q * [cin + (q-1) cout]); positive means the structure
// is detectable. Assortative inputs only (cin >= cout).
double detectability_margin(int q, double cin, double cout);

// Squared overlap of the leading eigenvector with the planted signal,
// [(cin-cout)^2 - 2(cin+cout)] / (cin-cout)^2, clamped below at zero.
double alpha_squared(double cin, double cout);

// Expected fraction of correctly classified vertices for the two-group
// sign method: (1 + erf(sqrt(alpha^2 / (2(1-alpha^2))))) / 2.
double expected_accuracy(double cin, double cout);

// Closed-form prediction bundle. The two-group quantities (z1, z2,
// alpha_squared, expected_accuracy) are only populated for q = 2, and z1
// additionally requires cin != cout.
struct TheoryPrediction {
  double band_edge = 0.0;
  std::optional<double> z1;
  std::optional<double> z2_adjacency;
  double detectability_margin = 0.0;
  bool detectable = false;
  std::optional<double> alpha_squared;
  std::optional<double> expected_accuracy;
};

TheoryPrediction predict(const BlockParams& params);

}  // namespace sbm::theory
