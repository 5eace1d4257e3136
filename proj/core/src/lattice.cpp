// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/lattice.hpp"

#include <algorithm>
#include <limits>

#include "rtnlab/error.hpp"

namespace rtnlab {

std::uint64_t LatticeSpec::amplitude_count() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < sites(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / phys_dim) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= phys_dim;
  }
  return total;
}

void LatticeSpec::validate(std::uint64_t amplitude_cap) const {
  if (rows < 2 || cols < 2) throw InvalidArgument("lattice " + label() + ": need rows, cols >= 2");
  if (bond_dim < 2) throw InvalidArgument("bond dimension must be >= 2");
  if (phys_dim < 2) throw InvalidArgument("physical dimension must be >= 2");
  if (amplitude_count() > amplitude_cap) {
    throw ResourceLimit("lattice " + label() + " with d=" + std::to_string(phys_dim) +
                        " exceeds the dense amplitude cap of " + std::to_string(amplitude_cap));
  }
}

std::string LatticeSpec::label() const { return std::to_string(rows) + "x" + std::to_string(cols); }

std::size_t toric_distance(const LatticeSpec& spec, std::size_t a, std::size_t b) {
  const SiteCoord ca = spec.coord(a);
  const SiteCoord cb = spec.coord(b);
  const std::size_t dx = ca.x > cb.x ? ca.x - cb.x : cb.x - ca.x;
  const std::size_t dy = ca.y > cb.y ? ca.y - cb.y : cb.y - ca.y;
  return std::min(dx, spec.rows - dx) + std::min(dy, spec.cols - dy);
}

}  // namespace rtnlab
