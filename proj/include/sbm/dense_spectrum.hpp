#pragma once

#include <cstdint>

#include "sbm/lanczos.hpp"
#include "sbm/linear_operator.hpp"

namespace sbm {

inline constexpr std::int64_t kDenseLimit = 4096;

// Full spectrum of a symmetric operator: the matrix is materialized column
// by column through matvec on basis vectors, tridiagonalized (Householder)
// and diagonalized by implicit-shift QL. Eigenvalues descending. Intended
// as the small-n oracle; refuses dimensions above n_limit.
SpectrumResult dense_full_spectrum(const LinearOperator& op,
                                   std::int64_t n_limit = kDenseLimit,
                                   bool want_vectors = false);

}  // namespace sbm
