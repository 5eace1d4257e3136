// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "rtnlab/polyomino.hpp"

namespace rtnlab {

inline constexpr std::size_t kSeriesCap = 24;

/// Coefficients of q^m p^n in gen_fun_G, expanded in exact rational arithmetic.
/// Throws ResourceLimit for m_max > kSeriesCap and ConsistencyError if a coefficient is
/// not a nonnegative integer.
PolyominoCounts series_coefficients(std::size_t m_max, std::size_t n_max);

}  // namespace rtnlab
