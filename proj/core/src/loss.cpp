// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/loss.hpp"

#include <cmath>

#include "rtnlab/error.hpp"
#include "rtnlab/network.hpp"

namespace rtnlab {
namespace {

constexpr double kMinNorm = 1e-14;

struct NetworkResult {
  Complex value;
  std::vector<Complex> derivatives;  // value with site k differentiated in the ket
};

NetworkResult overlap_network(const TNState& state, const std::vector<Vector>& phi, bool with_derivatives) {
  const LatticeSpec& spec = state.spec();
  std::vector<DenseTensor> blocks, replaced;
  for (std::size_t k = 0; k < spec.sites(); ++k) {
    blocks.push_back(single_layer_block(state.local_tensor(k), phi[k]));
    if (with_derivatives) replaced.push_back(single_layer_block(state.derivative_tensor(k), phi[k]));
  }
  TorusNetwork net(spec.rows, spec.cols, std::move(blocks));
  NetworkResult r{net.value(), {}};
  if (with_derivatives) r.derivatives = net.replaced_values(replaced);
  return r;
}

NetworkResult expectation_network(const TNState& state, const Matrix* op, std::size_t op_site,
                                  bool with_derivatives) {
  const LatticeSpec& spec = state.spec();
  std::vector<DenseTensor> blocks, replaced;
  for (std::size_t k = 0; k < spec.sites(); ++k) {
    const Matrix* x = (op != nullptr && k == op_site) ? op : nullptr;
    const DenseTensor& a = state.local_tensor(k);
    blocks.push_back(double_layer_block(a, a, x));
    if (with_derivatives) replaced.push_back(double_layer_block(state.derivative_tensor(k), a, x));
  }
  TorusNetwork net(spec.rows, spec.cols, std::move(blocks));
  NetworkResult r{net.value(), {}};
  if (with_derivatives) r.derivatives = net.replaced_values(replaced);
  return r;
}

LossEvaluation evaluate(const TNState& state, const LossSpec& loss, bool with_gradient) {
  const LatticeSpec& spec = state.spec();
  spec.validate();
  loss.validate(spec);
  const std::size_t V = spec.sites();
  LossEvaluation out;

  const bool normalized = is_normalized(loss.kind);
  NetworkResult z;
  if (normalized) {
    z = expectation_network(state, nullptr, 0, with_gradient);
    out.norm_squared = z.value.real();
    if (out.norm_squared < kMinNorm) throw DegenerateState("norm squared below 1e-14");
  }
  const double Z = out.norm_squared;

  if (is_global(loss.kind)) {
    const NetworkResult o = overlap_network(state, loss.product_state(spec), with_gradient);
    const double fidelity = std::norm(o.value);
    out.value = normalized ? 1.0 - fidelity / Z : 1.0 - fidelity;
    if (with_gradient) {
      out.gradient.resize(V);
      for (std::size_t k = 0; k < V; ++k) {
        const double dfid = 2.0 * (std::conj(o.value) * o.derivatives[k]).real();
        if (normalized) {
          const double dz = 2.0 * z.derivatives[k].real();
          out.gradient[k] = -(dfid * Z - fidelity * dz) / (Z * Z);
        } else {
          out.gradient[k] = -dfid;
        }
      }
    }
  } else {
    const NetworkResult e = expectation_network(state, &loss.observable, loss.site, with_gradient);
    const double ev = e.value.real();
    out.value = normalized ? ev / Z : ev;
    if (with_gradient) {
      out.gradient.resize(V);
      for (std::size_t k = 0; k < V; ++k) {
        const double dev = 2.0 * e.derivatives[k].real();
        if (normalized) {
          const double dz = 2.0 * z.derivatives[k].real();
          out.gradient[k] = (dev * Z - ev * dz) / (Z * Z);
        } else {
          out.gradient[k] = dev;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::global_pure: return "global_pure";
    case LossKind::global_normalized: return "global_normalized";
    case LossKind::local_unnormalized: return "local_unnormalized";
    case LossKind::local_normalized: return "local_normalized";
  }
  return "unknown";
}

LossKind parse_loss_kind(const std::string& name) {
  for (LossKind k : {LossKind::global_pure, LossKind::global_normalized, LossKind::local_unnormalized,
                     LossKind::local_normalized}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgument("unknown loss kind '" + name + "'");
}

bool is_global(LossKind kind) { return kind == LossKind::global_pure || kind == LossKind::global_normalized; }

bool is_normalized(LossKind kind) {
  return kind == LossKind::global_normalized || kind == LossKind::local_normalized;
}

LossSpec LossSpec::global(LossKind kind, Vector site_target) {
  if (!is_global(kind)) throw InvalidArgument("global loss kind expected");
  LossSpec s;
  s.kind = kind;
  s.target.push_back(std::move(site_target));
  return s;
}

LossSpec LossSpec::local(LossKind kind, Matrix observable, std::size_t site, bool theory_mode) {
  if (is_global(kind)) throw InvalidArgument("local loss kind expected");
  LossSpec s;
  s.kind = kind;
  s.observable = std::move(observable);
  s.site = site;
  s.theory_mode = theory_mode;
  return s;
}

void LossSpec::validate(const LatticeSpec& lattice) const {
  if (is_global(kind)) {
    if (target.size() != 1 && target.size() != lattice.sites()) {
      throw InvalidArgument("target needs one vector or one per site");
    }
    check_product_state(lattice, product_state(lattice));
    return;
  }
  if (site >= lattice.sites()) throw InvalidArgument("observable site out of range");
  check_observable(lattice, observable);
  if (theory_mode && std::abs(observable.trace()) > 1e-12) {
    throw InvalidArgument("theory mode requires a traceless observable");
  }
}

std::vector<Vector> LossSpec::product_state(const LatticeSpec& lattice) const {
  if (target.size() == 1) return std::vector<Vector>(lattice.sites(), target.front());
  return target;
}

Vector plus_state(std::size_t d) {
  if (d < 2) throw InvalidArgument("dimension must be >= 2");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v(0) = v(1) = 1.0 / std::sqrt(2.0);
  return v;
}

Matrix plus_projector(std::size_t d) {
  const Vector v = plus_state(d);
  return v * v.adjoint();
}

Matrix traceless_observable(std::size_t d) {
  if (d < 2) throw InvalidArgument("dimension must be >= 2");
  Matrix o = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  o(0, 0) = 1.0;
  o(1, 1) = -1.0;
  return o;
}

double loss_value(const TNState& state, const LossSpec& loss) { return evaluate(state, loss, false).value; }

LossEvaluation loss_and_gradients(const TNState& state, const LossSpec& loss) {
  return evaluate(state, loss, true);
}

double analytic_gradient(const TNState& state, std::size_t site, const LossSpec& loss) {
  if (site >= state.spec().sites()) throw InvalidArgument("site index out of range");
  return evaluate(state, loss, true).gradient[site];
}

}  // namespace rtnlab
