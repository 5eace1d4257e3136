// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rtnlab/dense_tensor.hpp"
#include "rtnlab/haar.hpp"
#include "rtnlab/lattice.hpp"

namespace rtnlab {

/// One site's unitary, U = u_minus * exp(-i theta G) * u_plus.
struct SiteParameterization {
  UnitaryMatrix u_minus = UnitaryMatrix::identity(1);
  UnitaryMatrix u_plus = UnitaryMatrix::identity(1);
  Matrix generator;  ///< Hermitian
  double theta = 0.0;

  Matrix embedded_unitary() const;
  /// dU/dtheta = u_minus (-i G) exp(-i theta G) u_plus.
  Matrix derivative_unitary() const;
};

/// Legs (up-in, left-in, down-out, right-out, physical) with extents (D, D, D, D, d).
/// A[a, b, c, e, j] = U[(c D + e) d + j, (a D + b) d + 0]: the input physical leg is fed |0>.
DenseTensor local_tensor(const Matrix& site_unitary, std::size_t bond_dim, std::size_t phys_dim);
DenseTensor local_tensor(const SiteParameterization& site, std::size_t bond_dim, std::size_t phys_dim);
DenseTensor derivative_local_tensor(const SiteParameterization& site, std::size_t bond_dim,
                                    std::size_t phys_dim);

/// Immutable random tensor-network state. Sites are stored row-major.
class TNState {
 public:
  TNState(LatticeSpec spec, std::vector<SiteParameterization> sites, std::uint64_t seed = 0);

  const LatticeSpec& spec() const { return spec_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<SiteParameterization>& sites() const { return sites_; }
  const SiteParameterization& site(std::size_t k) const { return sites_.at(k); }
  const DenseTensor& local_tensor(std::size_t k) const { return tensors_.at(k); }
  const DenseTensor& derivative_tensor(std::size_t k) const { return derivatives_.at(k); }

  TNState with_theta(std::size_t k, double theta) const;
  TNState with_site(std::size_t k, SiteParameterization site) const;

 private:
  LatticeSpec spec_;
  std::vector<SiteParameterization> sites_;
  std::uint64_t seed_ = 0;
  std::vector<DenseTensor> tensors_;
  std::vector<DenseTensor> derivatives_;
};

/// Independent Haar u_minus, u_plus, Gaussian Hermitian generator and theta ~ U[0, 2 pi)
/// for every site, drawn in row-major site order.
TNState build_state(const LatticeSpec& spec, Rng& rng,
                    std::uint64_t amplitude_cap = LatticeSpec::kDefaultAmplitudeCap);

/// Same, with the random stream derived from `seed` (recorded in the state).
TNState build_state(const LatticeSpec& spec, std::uint64_t seed,
                    std::uint64_t amplitude_cap = LatticeSpec::kDefaultAmplitudeCap);

}  // namespace rtnlab
