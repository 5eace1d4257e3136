// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace rtnlab {

struct SiteCoord {
  std::size_t x = 0;  ///< row
  std::size_t y = 0;  ///< column
  friend bool operator==(const SiteCoord&, const SiteCoord&) = default;
};

/// Periodic rows x cols lattice with bond dimension D and physical dimension d.
/// Site (x, y) takes its inputs from (x-1, y) and (x, y-1) and feeds (x+1, y) and (x, y+1).
struct LatticeSpec {
  static constexpr std::uint64_t kDefaultAmplitudeCap = std::uint64_t{1} << 24;

  std::size_t rows = 2;
  std::size_t cols = 2;
  std::size_t bond_dim = 2;
  std::size_t phys_dim = 2;

  std::size_t sites() const { return rows * cols; }
  /// D^2 d, the dimension each site unitary acts on.
  std::size_t unitary_dim() const { return bond_dim * bond_dim * phys_dim; }
  std::size_t index(std::size_t x, std::size_t y) const { return x * cols + y; }
  SiteCoord coord(std::size_t k) const { return {k / cols, k % cols}; }

  /// d^(rows*cols), saturating at UINT64_MAX.
  std::uint64_t amplitude_count() const;

  /// Throws InvalidArgument for rows, cols, D or d below 2 and ResourceLimit when
  /// d^(rows*cols) exceeds `amplitude_cap`.
  void validate(std::uint64_t amplitude_cap = kDefaultAmplitudeCap) const;

  /// "3x4"
  std::string label() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Manhattan distance on the torus, minimized over windings.
std::size_t toric_distance(const LatticeSpec& spec, std::size_t a, std::size_t b);

}  // namespace rtnlab
