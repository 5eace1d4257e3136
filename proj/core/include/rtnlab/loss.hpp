// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rtnlab/haar.hpp"
#include "rtnlab/state.hpp"

namespace rtnlab {

enum class LossKind {
  global_pure,         ///< 1 - |<phi|Psi>|^2
  global_normalized,   ///< 1 - |<phi|Psi>|^2 / Z
  local_unnormalized,  ///< <Psi|O_i|Psi>
  local_normalized,    ///< <Psi|O_i|Psi> / Z
};

std::string to_string(LossKind kind);
/// Accepts the names printed by to_string. Throws InvalidArgument otherwise.
LossKind parse_loss_kind(const std::string& name);
bool is_global(LossKind kind);
bool is_normalized(LossKind kind);

struct LossSpec {
  LossKind kind = LossKind::global_normalized;
  /// Product-state target for global kinds: one vector per site, or a single vector used
  /// at every site.
  std::vector<Vector> target;
  Matrix observable;  ///< local kinds, d x d Hermitian
  std::size_t site = 0;
  /// Additionally require a traceless observable.
  bool theory_mode = false;

  static LossSpec global(LossKind kind, Vector site_target);
  static LossSpec local(LossKind kind, Matrix observable, std::size_t site, bool theory_mode = false);

  /// Throws InvalidArgument when the spec does not fit the lattice.
  void validate(const LatticeSpec& lattice) const;
  /// Target expanded to one vector per site.
  std::vector<Vector> product_state(const LatticeSpec& lattice) const;
};

/// |+> = (|0> + |1>)/sqrt(2) padded with zeros to dimension d.
Vector plus_state(std::size_t d);
/// |+><+| in dimension d.
Matrix plus_projector(std::size_t d);
/// diag(1, -1, 0, ...): traceless with Tr(O^2) = 2.
Matrix traceless_observable(std::size_t d);

struct LossEvaluation {
  double value = 0.0;
  std::vector<double> gradient;  ///< d L / d theta_k, row-major sites
  double norm_squared = 0.0;     ///< Z
};

/// Throws DegenerateState when a normalized kind meets Z < 1e-14.
double loss_value(const TNState& state, const LossSpec& loss);
LossEvaluation loss_and_gradients(const TNState& state, const LossSpec& loss);
double analytic_gradient(const TNState& state, std::size_t site, const LossSpec& loss);

}  // namespace rtnlab
