// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rtnlab/error.hpp"

namespace rtnlab {
namespace {

void check_dims(std::size_t D, std::size_t d) {
  if (D < 2 || d < 2) throw InvalidArgument("weight tables need D, d >= 2");
}

}  // namespace

std::string to_string(WeightKind kind) { return kind == WeightKind::norm_f ? "norm_f" : "global_g"; }

double WeightTable::max_entry() const { return *std::max_element(entries.begin(), entries.end()); }

WeightTable f_table(std::size_t D, std::size_t d) {
  check_dims(D, d);
  const double bd = static_cast<double>(D);
  const double pd = static_cast<double>(d);
  const double den = std::pow(bd, 4) * pd * pd - 1.0;
  const double q_p = (std::pow(bd, 3) * pd * pd - bd) / den;
  const double mixed = (std::pow(bd, 3) * pd - bd * pd) / den;
  WeightTable t;
  t.bond_dim = D;
  t.phys_dim = d;
  t.kind = WeightKind::norm_f;
  using S = Spin;
  t.entries[WeightTable::index(S::down, S::down, S::down)] = 1.0;
  t.entries[WeightTable::index(S::down, S::down, S::up)] = q_p;
  t.entries[WeightTable::index(S::down, S::up, S::down)] = q_p;
  t.entries[WeightTable::index(S::down, S::up, S::up)] = (bd * bd * pd * pd - bd * bd) / den;
  t.entries[WeightTable::index(S::up, S::down, S::down)] = 0.0;
  t.entries[WeightTable::index(S::up, S::down, S::up)] = mixed;
  t.entries[WeightTable::index(S::up, S::up, S::down)] = mixed;
  t.entries[WeightTable::index(S::up, S::up, S::up)] = (std::pow(bd, 4) * pd - pd) / den;
  return t;
}

WeightTable g_table(std::size_t D, std::size_t d) {
  check_dims(D, d);
  const double bd = static_cast<double>(D);
  const double pd = static_cast<double>(d);
  const double n = bd * bd * pd;
  const double den = n * n - 1.0;
  const double same = (std::pow(bd, 4) - 1.0 / pd) / den;
  const double one_flip = (std::pow(bd, 3) - bd / pd) / den;
  const double two_flip = (bd * bd - bd * bd / pd) / den;
  WeightTable t;
  t.bond_dim = D;
  t.phys_dim = d;
  t.kind = WeightKind::global_g;
  using S = Spin;
  t.entries[WeightTable::index(S::down, S::down, S::down)] = same;
  t.entries[WeightTable::index(S::up, S::up, S::up)] = same;
  t.entries[WeightTable::index(S::down, S::down, S::up)] = one_flip;
  t.entries[WeightTable::index(S::down, S::up, S::down)] = one_flip;
  t.entries[WeightTable::index(S::up, S::down, S::up)] = one_flip;
  t.entries[WeightTable::index(S::up, S::up, S::down)] = one_flip;
  t.entries[WeightTable::index(S::up, S::down, S::down)] = two_flip;
  t.entries[WeightTable::index(S::down, S::up, S::up)] = two_flip;
  return t;
}

WeightTable weight_table(WeightKind kind, std::size_t D, std::size_t d) {
  return kind == WeightKind::norm_f ? f_table(D, d) : g_table(D, d);
}
IsingCouplings IsingCouplings::for_kind(WeightKind kind, std::size_t D, std::size_t d) {
  check_dims(D, d);
  const double n = static_cast<double>(D * D * d);
  IsingCouplings c;
  c.kind = kind;
  c.j1 = std::log(static_cast<double>(D));
  c.j2 = Complex(std::log(n), std::numbers::pi);
  const Complex minus_i(0.0, -1.0);
  if (kind == WeightKind::norm_f) {
    c.h_z = std::log(static_cast<double>(d));
    c.site_constant = minus_i * n / (n * n - 1.0);
  } else {
    c.h_z = 0.0;
    c.site_constant = minus_i * static_cast<double>(D * D) / (std::sqrt(static_cast<double>(d)) * (n * n - 1.0));
  }
  return c;
}

Complex IsingCouplings::normalization(std::size_t volume) const {
  return std::pow(site_constant, static_cast<double>(volume));
}

Complex two_layer_site_weight(const IsingCouplings& c, Spin bottom, Spin self, Spin right, Spin down) {
  const double s1 = sign(bottom);
  const Complex exponent =
      0.5 * (s1 * (sign(right) + sign(down)) * c.j1 + s1 * sign(self) * c.j2 + s1 * c.h_z);
  return std::exp(exponent);
}

Complex summed_site_weight(const IsingCouplings& c, Spin self, Spin right, Spin down) {
  return c.site_constant * (two_layer_site_weight(c, Spin::down, self, right, down) +
                            two_layer_site_weight(c, Spin::up, self, right, down));
}

}  // namespace rtnlab
