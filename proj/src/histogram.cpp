#include "sbm/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbm {

DensityTable spectral_histogram(std::span<const double> eigenvalues, int bins,
                                double lo, double hi) {
  if (eigenvalues.empty()) {
    throw std::invalid_argument("spectral_histogram: no eigenvalues");
  }
  if (bins < 1) {
    throw std::invalid_argument("spectral_histogram: bins must be >= 1");
  }
  if (!(hi > lo)) {
    throw std::invalid_argument("spectral_histogram: zero-width range");
  }

  DensityTable table;
  table.lo = lo;
  table.hi = hi;
  table.bin_width = (hi - lo) / bins;
  table.centers.resize(bins);
  for (int b = 0; b < bins; ++b) {
    table.centers[b] = lo + (b + 0.5) * table.bin_width;
  }

  std::vector<std::int64_t> counts(bins, 0);
  for (double z : eigenvalues) {
    auto b = static_cast<std::int64_t>(std::floor((z - lo) / table.bin_width));
    b = std::clamp<std::int64_t>(b, 0, bins - 1);
    counts[b]++;
  }
  const double norm =
      1.0 / (static_cast<double>(eigenvalues.size()) * table.bin_width);
  table.density.resize(bins);
  for (int b = 0; b < bins; ++b) {
    table.density[b] = static_cast<double>(counts[b]) * norm;
  }
  return table;
}

}  // namespace sbm
