// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "rtnlab/dense_tensor.hpp"

namespace rtnlab {

/// down is the identity pairing of the two replicas, up the swap pairing.
enum class Spin : unsigned char { down = 0, up = 1 };

/// +1 for down, -1 for up.
inline int sign(Spin s) { return s == Spin::down ? 1 : -1; }

enum class WeightKind {
  norm_f,    ///< E<Psi|Psi>^2
  global_g,  ///< physical legs closed on a product target
};

std::string to_string(WeightKind kind);

/// Single-site weight w(self, right, down) where right = (x, y+1) and down = (x+1, y).
struct WeightTable {
  std::size_t bond_dim = 0;
  std::size_t phys_dim = 0;
  WeightKind kind = WeightKind::norm_f;
  std::array<double, 8> entries{};  ///< index 4*self + 2*right + down, up = 1

  static std::size_t index(Spin self, Spin right, Spin down) {
    return 4u * static_cast<unsigned>(self) + 2u * static_cast<unsigned>(right) + static_cast<unsigned>(down);
  }
  double operator()(Spin self, Spin right, Spin down) const { return entries[index(self, right, down)]; }
  double max_entry() const;
};

/// Exact second-moment weights of a site. Throws InvalidArgument for D or d below 2.
WeightTable f_table(std::size_t bond_dim, std::size_t phys_dim);
WeightTable g_table(std::size_t bond_dim, std::size_t phys_dim);
WeightTable weight_table(WeightKind kind, std::size_t bond_dim, std::size_t phys_dim);

/// Two-layer Ising form of the same weights. With s = sign(spin):
///   exp(-H) = exp( s1 (s_right + s_down) J1 / 2 + s1 s_self J2 / 2 + s1 h_z / 2 )
/// and the bottom spin s1 summed out, times `site_constant`, gives the table entry.
struct IsingCouplings {
  WeightKind kind = WeightKind::norm_f;
  Complex j1;             ///< log D
  Complex j2;             ///< i pi + log(D^2 d)
  double h_z = 0.0;       ///< log d for norm_f, 0 for global_g
  Complex site_constant;  ///< -i N/(N^2-1) for norm_f, -i D^2/(sqrt(d)(N^2-1)) for global_g

  static IsingCouplings for_kind(WeightKind kind, std::size_t bond_dim, std::size_t phys_dim);
  /// site_constant^V.
  Complex normalization(std::size_t volume) const;
};

/// exp(-H) of one site for bottom spin `bottom` and top spins (self, right, down).
Complex two_layer_site_weight(const IsingCouplings& c, Spin bottom, Spin self, Spin right, Spin down);

/// site_constant * sum over the bottom spin.
Complex summed_site_weight(const IsingCouplings& c, Spin self, Spin right, Spin down);

}  // namespace rtnlab
