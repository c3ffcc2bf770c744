#include "sbm/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sbm {

TridiagEigen tridiag_eigen(std::vector<double> d, std::vector<double> e,
                           bool want_vectors, bool track_last_row) {
  const std::int64_t n = static_cast<std::int64_t>(d.size());
  if (n == 0) {
    throw std::invalid_argument("tridiag_eigen: empty matrix");
  }
  if (static_cast<std::int64_t>(e.size()) != n - 1) {
    throw std::invalid_argument("tridiag_eigen: offdiag must have n-1 entries");
  }
  e.push_back(0.0);  // sentinel e[n-1]

  TridiagEigen out;
  std::vector<double> z;
  std::vector<double> zrow;
  if (want_vectors) {
    z.assign(n * n, 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
      z[i * n + i] = 1.0;
    }
  } else if (track_last_row) {
    zrow.assign(n, 0.0);
    zrow[n - 1] = 1.0;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 50;

  for (std::int64_t l = 0; l < n; ++l) {
    int iter = 0;
    std::int64_t m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) {
          break;
        }
      }
      if (m != l) {
        if (iter++ == kMaxSweeps) {
          throw std::runtime_error("tridiag_eigen: QL sweep limit exceeded");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::int64_t i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (want_vectors) {
            for (std::int64_t k = 0; k < n; ++k) {
              f = z[k * n + i + 1];
              z[k * n + i + 1] = s * z[k * n + i] + c * f;
              z[k * n + i] = c * z[k * n + i] - s * f;
            }
          } else if (track_last_row) {
            f = zrow[i + 1];
            zrow[i + 1] = s * zrow[i] + c * f;
            zrow[i] = c * zrow[i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) {
          continue;
        }
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Sort ascending, carrying vectors / tracked row along.
  std::vector<std::int64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](std::int64_t a, std::int64_t b) { return d[a] < d[b]; });
  out.values.resize(n);
  for (std::int64_t j = 0; j < n; ++j) {
    out.values[j] = d[order[j]];
  }
  if (want_vectors) {
    out.vectors.assign(n * n, 0.0);
    for (std::int64_t j = 0; j < n; ++j) {
      for (std::int64_t i = 0; i < n; ++i) {
        out.vectors[i * n + j] = z[i * n + order[j]];
      }
    }
  } else if (track_last_row) {
    out.last_row.resize(n);
    for (std::int64_t j = 0; j < n; ++j) {
      out.last_row[j] = zrow[order[j]];
    }
  }
  return out;
}

}  // namespace sbm
