// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "rtnlab/dense_tensor.hpp"

namespace rtnlab {

/// Weingarten coefficients of the twofold Haar average on U(N):
/// same pairing 1/(N^2-1), crossed pairing -1/(N (N^2-1)).
struct SecondMomentWeights {
  std::size_t dim = 0;
  double w_same = 0.0;
  double w_cross = 0.0;

  /// Throws InvalidArgument for dim < 2 (the coefficients diverge at N = 1).
  static SecondMomentWeights for_dim(std::size_t dim);
};

/// E_U[(U (x) U) X (U (x) U)^dagger] for a four-leg input laid out as
/// X[a, a', b, b'] = <a|rho_1|a'> <b|rho_2|b'> (legs: ket1, bra1, ket2, bra2).
///
/// The average is the weighted sum of the identity and swap pairings; no sampling involved.
/// Throws ShapeError unless the input has four legs of extent `weights.dim`.
DenseTensor second_moment_channel(const SecondMomentWeights& weights, const DenseTensor& input);

}  // namespace rtnlab
