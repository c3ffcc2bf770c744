#include "sbm/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace sbm::theory {
namespace {

constexpr double kLnGammaHalf = 0.5723649429247001;  // ln Gamma(1/2) = ln sqrt(pi)
constexpr double kEps = 1e-16;
constexpr int kMaxTerms = 300;

// Regularized lower incomplete gamma P(1/2, x) by power series; valid for
// small x.
double gamma_p_series(double x) {
  const double a = 0.5;
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxTerms; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(-x + a * std::log(x) - kLnGammaHalf);
}

// Complement Q(1/2, x) by modified Lentz continued fraction; valid for
// larger x.
double gamma_q_cf(double x) {
  const double a = 0.5;
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) {
      d = kTiny;
    }
    c = b + an / c;
    if (std::fabs(c) < kTiny) {
      c = kTiny;
    }
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) {
      break;
    }
  }
  return std::exp(-x + a * std::log(x) - kLnGammaHalf) * h;
}

}  // namespace

double erf(double x) {
  if (x == 0.0) {
    return 0.0;
  }
  const double x2 = x * x;
  double p;
  if (x2 < 1.5) {
    p = gamma_p_series(x2);
  } else {
    p = 1.0 - gamma_q_cf(x2);
  }
  return x > 0.0 ? p : -p;
}

std::int64_t catalan(int m) {
  if (m < 0) {
    throw std::invalid_argument("catalan: negative index");
  }
  if (m > 30) {
    throw std::invalid_argument("catalan: index above 30 overflows 64-bit");
  }
  std::int64_t c = 1;
  for (int k = 1; k <= m; ++k) {
    c = c * 2 * (2 * k - 1) / (k + 1);  // exact at every step
  }
  return c;
}

double band_edge(double cin, double cout) {
  if (cin < 0.0 || cout < 0.0) {
    throw std::invalid_argument("band_edge: negative degree parameter");
  }
  return std::sqrt(2.0 * (cin + cout));
}

double semicircle_density(double z, double cin, double cout, double n_scale) {
  const double s = cin + cout;
  if (!(s > 0.0)) {
    throw std::invalid_argument("semicircle_density: cin + cout must be positive");
  }
  const double support = 2.0 * s - z * z;
  if (support <= 0.0) {
    return 0.0;
  }
  return n_scale / M_PI * std::sqrt(support) / s;
}

double semicircle_density_unit(double z, double cin, double cout) {
  return semicircle_density(z, cin, cout, 1.0);
}

double z1_theory(double cin, double cout) {
  if (cin == cout) {
    throw std::invalid_argument("z1_theory: singular at cin == cout");
  }
  const double delta = cin - cout;
  return 0.5 * delta + (cin + cout) / delta;
}

double z2_adjacency_theory(double cin, double cout) {
  return 0.5 * (cin + cout) + 1.0;
}

double detectability_margin(int q, double cin, double cout) {
  if (q < 2) {
    throw std::invalid_argument("detectability_margin: q must be >= 2");
  }
  if (cin < 0.0 || cout < 0.0) {
    throw std::invalid_argument("detectability_margin: negative degree parameter");
  }
  if (cin < cout) {
    throw std::invalid_argument(
        "detectability_margin: disassortative regime (cin < cout) unsupported");
  }
  return (cin - cout) - std::sqrt(q * (cin + (q - 1) * cout));
}

double alpha_squared(double cin, double cout) {
  if (cin < cout) {
    throw std::invalid_argument("alpha_squared: requires cin >= cout");
  }
  const double delta = cin - cout;
  if (delta == 0.0) {
    return 0.0;
  }
  const double value = (delta * delta - 2.0 * (cin + cout)) / (delta * delta);
  return value > 0.0 ? value : 0.0;
}

double expected_accuracy(double cin, double cout) {
  const double a2 = alpha_squared(cin, cout);
  if (a2 <= 0.0) {
    return 0.5;
  }
  if (a2 >= 1.0) {
    return 1.0;
  }
  return 0.5 * (1.0 + erf(std::sqrt(a2 / (2.0 * (1.0 - a2)))));
}

TheoryPrediction predict(const BlockParams& params) {
  TheoryPrediction pred;
  const double c = mean_degree(params);
  // For q = 2 this equals sqrt(2(cin+cout)); the general bulk edge is
  // 2 sqrt(c) for mean degree c.
  pred.band_edge = params.q == 2 ? band_edge(params.cin, params.cout)
                                 : 2.0 * std::sqrt(c);
  pred.detectability_margin = detectability_margin(params.q, params.cin, params.cout);
  pred.detectable = pred.detectability_margin > 0.0;
  if (params.q == 2) {
    if (params.cin != params.cout) {
      pred.z1 = z1_theory(params.cin, params.cout);
    }
    pred.z2_adjacency = z2_adjacency_theory(params.cin, params.cout);
    pred.alpha_squared = alpha_squared(params.cin, params.cout);
    pred.expected_accuracy = expected_accuracy(params.cin, params.cout);
  }
  return pred;
}

}  // namespace sbm::theory
