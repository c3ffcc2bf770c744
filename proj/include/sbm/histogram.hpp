#pragma once

#include <span>
#include <vector>

namespace sbm {

// Normalized spectral histogram: sum over bins of density * width == 1.
struct DensityTable {
  std::vector<double> centers;
  std::vector<double> density;
  double lo = 0.0;
  double hi = 0.0;
  double bin_width = 0.0;
};

// Values outside [lo, hi] are clamped into the boundary bins so the
// normalization is exact.
DensityTable spectral_histogram(std::span<const double> eigenvalues, int bins,
                                double lo, double hi);

}  // namespace sbm
