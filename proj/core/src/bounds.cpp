// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/bounds.hpp"

#include <cmath>
#include <limits>

#include "rtnlab/error.hpp"
#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"
#include "rtnlab/weights.hpp"

namespace rtnlab {
namespace {

std::string dims(std::size_t D, std::size_t d) { return "D=" + std::to_string(D) + " d=" + std::to_string(d); }

}  // namespace

BoundReport make_report(std::string name, std::string parameters, double bound, double compared, std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.parameters = std::move(parameters);
  r.bound = bound;
  r.compared = compared;
  r.satisfied = compared <= bound;
  r.slack = compared > 0.0 ? bound / compared : std::numeric_limits<double>::infinity();
  r.note = std::move(note);
  return r;
}

Theorem1Chain theorem1_chain(std::size_t L, std::size_t D, std::size_t d, bool with_exact) {
  if (L < 2) throw InvalidArgument("theorem1_chain needs L >= 2");
  const WeightTable f = f_table(D, d);
  Theorem1Chain c;
  c.L = L;
  c.bond_dim = D;
  c.phys_dim = d;
  c.q_a = f(Spin::up, Spin::up, Spin::up);
  c.q_p = f(Spin::down, Spin::down, Spin::up);
  c.p_u = c.q_p * c.q_p;
  c.g_value = gen_fun_G(c.q_a / c.eta, c.p_u);
  const double Ld = static_cast<double>(L);
  const double log_inner = 2.0 * std::log(Ld) - std::log(c.p_u) + Ld * std::log(c.eta) + std::log(c.g_value);
  c.inner = std::exp(log_inner);
  const double best_k = log_inner > 0.0 ? Ld : 1.0;
  c.log_bound = std::log(Ld / (1.0 - c.p_u)) + best_k * log_inner;
  c.bound = std::exp(c.log_bound);

  const std::string params = "L=" + std::to_string(L) + " " + dims(D, d);
  if (with_exact && L * L <= 25) {
    c.exact_z_minus_one = exact_partition_function(L, L, f).z_minus_one;
    c.report = make_report("theorem1_chain", params, c.bound, *c.exact_z_minus_one, "exact Z-1 vs tail-sum chain");
  } else {
    c.report = make_report("theorem1_chain", params, c.bound, 0.0, "no exact comparison");
  }
  return c;
}

BoundReport theorem1_rate(std::size_t L, std::size_t D, std::size_t d) {
  const Theorem1Chain a = theorem1_chain(L, D, d, false);
  const Theorem1Chain b = theorem1_chain(L + 1, D, d, false);
  const double Ld = static_cast<double>(L);
  const double allowed = 0.97 * std::pow((Ld + 1.0) / Ld, 3.0);
  return make_report("theorem1_rate", "L=" + std::to_string(L) + " " + dims(D, d), allowed,
                     std::exp(b.log_bound - a.log_bound), "bound(L+1)/bound(L) vs 0.97 ((L+1)/L)^3");
}

double theorem2_ratio(std::size_t D, std::size_t d) {
  return 2.0 * g_table(D, d)(Spin::down, Spin::down, Spin::down);
}

double theorem2_bound(std::size_t L, std::size_t D, std::size_t d, double constant) {
  const double g = g_table(D, d)(Spin::down, Spin::down, Spin::down);
  const double v = static_cast<double>(L * L);
  return constant * std::pow(2.0, v) * std::pow(g, v - 1.0);
}

std::vector<double> theorem3_profile(const std::vector<std::size_t>& deltas, std::size_t D) {
  if (D < 2) throw InvalidArgument("D must be >= 2");
  std::vector<double> out;
  out.reserve(deltas.size());
  for (std::size_t delta : deltas) {
    out.push_back(std::pow(kLocalDecay, static_cast<double>(delta)) / static_cast<double>(D * D));
  }
  return out;
}

Theorem4Floor theorem4_floor(std::size_t D, std::size_t d, double tr_o2, double tr_o) {
  if (D < 2 || d < 2) throw InvalidArgument("D, d must be >= 2");
  if (!(tr_o2 > 0.0)) throw InvalidArgument("Tr(O^2) must be positive");
  const double n = static_cast<double>(D * D * d);
  const double dd = static_cast<double>(d);
  const double scale = static_cast<double>(D * D) / (n * n - 1.0);
  return {scale * (1.0 - 1.0 / dd), scale * (tr_o2 - tr_o * tr_o / dd)};
}

}  // namespace rtnlab
