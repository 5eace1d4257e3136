// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rtnlab {

/// One-sided comparison: satisfied means compared <= bound.
struct BoundReport {
  std::string name;
  std::string parameters;
  double bound = 0.0;
  double compared = 0.0;
  bool satisfied = false;
  double slack = 0.0;  ///< bound / compared, infinite when compared <= 0
  std::string note;
};

BoundReport make_report(std::string name, std::string parameters, double bound, double compared,
                        std::string note = {});

inline constexpr double kChainEta = 25.0 / 26.0;

struct Theorem1Chain {
  std::size_t L = 0;
  std::size_t bond_dim = 0;
  std::size_t phys_dim = 0;
  double q_a = 0.0;  ///< f(up, up, up)
  double q_p = 0.0;  ///< f(down, down, up)
  double p_u = 0.0;  ///< q_p^2
  double eta = kChainEta;
  double g_value = 0.0;    ///< G(q_a / eta, p_u)
  double inner = 0.0;      ///< L^2 p_u^-1 eta^L G
  double log_bound = 0.0;  ///< log of L/(1-p_u) max_{k<=L} inner^k
  double bound = 0.0;      ///< exp(log_bound), may overflow to inf
  std::optional<double> exact_z_minus_one;
  BoundReport report;
};

/// Tail-sum chain bounding Z - 1. With `with_exact` and L <= 5 the exact Z - 1 from
/// exhaustive enumeration is attached and compared. Propagates DomainError from G.
Theorem1Chain theorem1_chain(std::size_t L, std::size_t bond_dim, std::size_t phys_dim, bool with_exact = true);

/// bound(L+1)/bound(L) compared with 0.97 ((L+1)/L)^3.
BoundReport theorem1_rate(std::size_t L, std::size_t bond_dim, std::size_t phys_dim);

/// 2 g(down, down, down): the per-site decay ratio of the global-loss bound.
double theorem2_ratio(std::size_t bond_dim, std::size_t phys_dim);

/// constant * 2^(L^2) g(down,down,down)^(L^2-1).
double theorem2_bound(std::size_t L, std::size_t bond_dim, std::size_t phys_dim, double constant = 1.0);

/// 0.93^delta / D^2 for each delta.
std::vector<double> theorem3_profile(const std::vector<std::size_t>& deltas, std::size_t bond_dim);

inline constexpr double kLocalDecay = 0.93;

struct Theorem4Floor {
  double basic = 0.0;       ///< D^2 (1 - 1/d) / (N^2 - 1)
  double observable = 0.0;  ///< D^2 (Tr O^2 - (Tr O)^2 / d) / (N^2 - 1)
};

/// Throws InvalidArgument for D, d < 2 or trO2 <= 0.
Theorem4Floor theorem4_floor(std::size_t bond_dim, std::size_t phys_dim, double tr_o2, double tr_o = 0.0);

}  // namespace rtnlab
