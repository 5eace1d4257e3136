// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/second_moment.hpp"

#include "rtnlab/error.hpp"

namespace rtnlab {

SecondMomentWeights SecondMomentWeights::for_dim(std::size_t dim) {
  if (dim < 2) throw InvalidArgument("second-moment weights need dim >= 2");
  const double n = static_cast<double>(dim);
  return {dim, 1.0 / (n * n - 1.0), -1.0 / (n * (n * n - 1.0))};
}

DenseTensor second_moment_channel(const SecondMomentWeights& weights, const DenseTensor& input) {
  const std::size_t n = weights.dim;
  if (input.rank() != 4) throw ShapeError("second_moment_channel expects a four-leg input");
  for (std::size_t leg = 0; leg < 4; ++leg) {
    if (input.extent(leg) != n) throw ShapeError("second_moment_channel: leg extent differs from N");
  }
  auto idx = [n](std::size_t a, std::size_t ap, std::size_t b, std::size_t bp) {
    return ((a * n + ap) * n + b) * n + bp;
  };

  // Input contracted with the two pairings: tr(rho1) tr(rho2) and tr(rho1 rho2).
  Complex t_identity{};
  Complex t_swap{};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t_identity += input[idx(a, a, b, b)];
      t_swap += input[idx(a, b, b, a)];
    }
  }
  const Complex c_identity = weights.w_same * t_identity + weights.w_cross * t_swap;
  const Complex c_swap = weights.w_cross * t_identity + weights.w_same * t_swap;

  DenseTensor out(Shape{n, n, n, n});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out[idx(a, a, b, b)] += c_identity;
      out[idx(a, b, b, a)] += c_swap;
    }
  }
  return out;
}

}  // namespace rtnlab
