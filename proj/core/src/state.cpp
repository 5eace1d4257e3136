// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/state.hpp"

#include <numbers>

#include "rtnlab/error.hpp"

namespace rtnlab {

Matrix SiteParameterization::embedded_unitary() const {
  return u_minus.matrix() * unitary_exponential(generator, theta) * u_plus.matrix();
}

Matrix SiteParameterization::derivative_unitary() const {
  const Complex minus_i(0.0, -1.0);
  return u_minus.matrix() * (minus_i * generator) * unitary_exponential(generator, theta) *
         u_plus.matrix();
}

DenseTensor local_tensor(const Matrix& u, std::size_t bond_dim, std::size_t phys_dim) {
  const std::size_t n = bond_dim * bond_dim * phys_dim;
  if (static_cast<std::size_t>(u.rows()) != n || static_cast<std::size_t>(u.cols()) != n) {
    throw ShapeError("site unitary must be D^2 d x D^2 d");
  }
  const std::size_t D = bond_dim;
  const std::size_t d = phys_dim;
  DenseTensor a(Shape{D, D, D, D, d});
  std::size_t flat = 0;
  for (std::size_t in_a = 0; in_a < D; ++in_a) {
    for (std::size_t in_b = 0; in_b < D; ++in_b) {
      const auto col = static_cast<Eigen::Index>((in_a * D + in_b) * d);
      for (std::size_t out_c = 0; out_c < D; ++out_c) {
        for (std::size_t out_e = 0; out_e < D; ++out_e) {
          for (std::size_t j = 0; j < d; ++j) {
            a[flat++] = u(static_cast<Eigen::Index>((out_c * D + out_e) * d + j), col);
          }
        }
      }
    }
  }
  return a;
}

DenseTensor local_tensor(const SiteParameterization& site, std::size_t bond_dim, std::size_t phys_dim) {
  return local_tensor(site.embedded_unitary(), bond_dim, phys_dim);
}

DenseTensor derivative_local_tensor(const SiteParameterization& site, std::size_t bond_dim,
                                    std::size_t phys_dim) {
  return local_tensor(site.derivative_unitary(), bond_dim, phys_dim);
}

TNState::TNState(LatticeSpec spec, std::vector<SiteParameterization> sites, std::uint64_t seed)
    : spec_(spec), sites_(std::move(sites)), seed_(seed) {
  if (sites_.size() != spec_.sites()) throw InvalidArgument("one parameterization per site required");
  const auto n = static_cast<Eigen::Index>(spec_.unitary_dim());
  tensors_.reserve(sites_.size());
  derivatives_.reserve(sites_.size());
  for (const auto& s : sites_) {
    if (s.u_minus.matrix().rows() != n || s.u_plus.matrix().rows() != n || s.generator.rows() != n ||
        s.generator.cols() != n) {
      throw ShapeError("site parameterization does not match D^2 d = " + std::to_string(n));
    }
    if (hermiticity_defect(s.generator) > 1e-12) throw InvalidArgument("generator is not Hermitian");
    tensors_.push_back(rtnlab::local_tensor(s, spec_.bond_dim, spec_.phys_dim));
    derivatives_.push_back(derivative_local_tensor(s, spec_.bond_dim, spec_.phys_dim));
  }
}

TNState TNState::with_theta(std::size_t k, double theta) const {
  SiteParameterization s = sites_.at(k);
  s.theta = theta;
  return with_site(k, std::move(s));
}

TNState TNState::with_site(std::size_t k, SiteParameterization site) const {
  TNState copy = *this;
  copy.sites_.at(k) = std::move(site);
  copy.tensors_[k] = rtnlab::local_tensor(copy.sites_[k], spec_.bond_dim, spec_.phys_dim);
  copy.derivatives_[k] = derivative_local_tensor(copy.sites_[k], spec_.bond_dim, spec_.phys_dim);
  return copy;
}

TNState build_state(const LatticeSpec& spec, Rng& rng, std::uint64_t amplitude_cap) {
  spec.validate(amplitude_cap);
  const std::size_t n = spec.unitary_dim();
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<SiteParameterization> sites;
  sites.reserve(spec.sites());
  for (std::size_t k = 0; k < spec.sites(); ++k) {
    SiteParameterization s;
    s.u_minus = haar_unitary(n, rng);
    s.u_plus = haar_unitary(n, rng);
    s.generator = random_hermitian(n, rng);
    s.theta = angle(rng);
    sites.push_back(std::move(s));
  }
  return TNState(spec, std::move(sites));
}

TNState build_state(const LatticeSpec& spec, std::uint64_t seed, std::uint64_t amplitude_cap) {
  Rng rng = make_rng(seed);
  spec.validate(amplitude_cap);
  TNState state = build_state(spec, rng, amplitude_cap);
  return TNState(spec, state.sites(), seed);
}

}  // namespace rtnlab
