// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/network.hpp"

#include <array>
#include <cmath>

#include "rtnlab/contract.hpp"
#include "rtnlab/error.hpp"

namespace rtnlab {
namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

constexpr std::array<std::size_t, 4> kTransposeBlock{1, 0, 3, 2};
constexpr std::array<std::size_t, 5> kTransposeSite{1, 0, 3, 2, 4};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Ring of blocks with legs (up, left, down, right[, extra]); result legs are
// (up_0..up_{n-1}, down_0..down_{n-1}[, extra_0..extra_{n-1}]) reshaped to 2 or 3 legs.
DenseTensor ring(const std::vector<const DenseTensor*>& blocks) {
  const int n = static_cast<int>(blocks.size());
  const bool extra = blocks.front()->rank() == 5;
  std::vector<Operand> ops;
  ops.reserve(blocks.size());
  for (int c = 0; c < n; ++c) {
    std::vector<Label> labels{c, n + c, 2 * n + c, n + (c + 1) % n};
    if (extra) labels.push_back(3 * n + c);
    ops.push_back({blocks[static_cast<std::size_t>(c)], std::move(labels)});
  }
  std::vector<Label> out;
  for (int c = 0; c < n; ++c) out.push_back(c);
  for (int c = 0; c < n; ++c) out.push_back(2 * n + c);
  if (extra) {
    for (int c = 0; c < n; ++c) out.push_back(3 * n + c);
  }
  DenseTensor t = contract(ops, out, ContractionOrder::left_to_right);
  const std::size_t chi = ipow(blocks.front()->extent(0), blocks.size());
  if (extra) return t.reshaped({chi, chi, ipow(blocks.front()->extent(4), blocks.size())});
  return t.reshaped({chi, chi});
}

void check_block(const DenseTensor& b, std::size_t chi) {
  if (b.rank() != 4 || b.extent(0) != chi || b.extent(1) != chi || b.extent(2) != chi ||
      b.extent(3) != chi) {
    throw ShapeError("torus block must have four legs of extent " + std::to_string(chi));
  }
}

}  // namespace

TorusNetwork::TorusNetwork(std::size_t rows, std::size_t cols, std::vector<DenseTensor> blocks)
    : rows_(rows), cols_(cols) {
  if (rows < 2 || cols < 2) throw InvalidArgument("torus network needs rows, cols >= 2");
  if (blocks.size() != rows * cols) throw InvalidArgument("one block per site required");
  const std::size_t chi = blocks.front().rank() == 4 ? blocks.front().extent(0) : 0;
  for (const auto& b : blocks) check_block(b, chi);
  transposed_ = cols > rows;
  ring_rows_ = transposed_ ? cols : rows;
  ring_len_ = transposed_ ? rows : cols;
  double transfer_dim = std::pow(static_cast<double>(chi), static_cast<double>(ring_len_));
  if (transfer_dim > static_cast<double>(kMaxTransferDim)) {
    throw ResourceLimit("transfer dimension " + std::to_string(static_cast<long long>(transfer_dim)) +
                        " exceeds " + std::to_string(kMaxTransferDim));
  }
  blocks_.resize(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks_[oriented_index(k)] = transposed_ ? blocks[k].permuted(kTransposeBlock) : std::move(blocks[k]);
  }
}

std::size_t TorusNetwork::oriented_index(std::size_t k) const {
  if (!transposed_) return k;
  const std::size_t x = k / cols_;
  const std::size_t y = k % cols_;
  return y * ring_len_ + x;
}

Matrix TorusNetwork::transfer(std::size_t row, std::size_t replaced_col,
                              const DenseTensor* replacement) const {
  std::vector<const DenseTensor*> ptrs(ring_len_);
  for (std::size_t c = 0; c < ring_len_; ++c) ptrs[c] = &blocks_[row * ring_len_ + c];
  if (replacement != nullptr) ptrs[replaced_col] = replacement;
  DenseTensor t = ring(ptrs);
  const auto dim = static_cast<Eigen::Index>(t.extent(0));
  return RowMajorMap(t.data().data(), dim, dim);
}

Complex TorusNetwork::value() const {
  Matrix acc = transfer(0, 0, nullptr);
  for (std::size_t r = 1; r < ring_rows_; ++r) acc = acc * transfer(r, 0, nullptr);
  return acc.trace();
}

std::vector<Complex> TorusNetwork::replaced_values(std::span<const DenseTensor> replacements) const {
  if (replacements.size() != blocks_.size()) throw InvalidArgument("one replacement per site required");
  const std::size_t chi = blocks_.front().extent(0);
  std::vector<Matrix> t(ring_rows_);
  for (std::size_t r = 0; r < ring_rows_; ++r) t[r] = transfer(r, 0, nullptr);
  const auto dim = t.front().rows();
  // prefix[r] = T_0 ... T_{r-1}, suffix[r] = T_r ... T_{R-1}
  std::vector<Matrix> prefix(ring_rows_ + 1), suffix(ring_rows_ + 1);
  prefix[0] = Matrix::Identity(dim, dim);
  for (std::size_t r = 0; r < ring_rows_; ++r) prefix[r + 1] = prefix[r] * t[r];
  suffix[ring_rows_] = Matrix::Identity(dim, dim);
  for (std::size_t r = ring_rows_; r-- > 0;) suffix[r] = t[r] * suffix[r + 1];

  std::vector<Complex> out(blocks_.size());
  for (std::size_t r = 0; r < ring_rows_; ++r) {
    const Matrix env = suffix[r + 1] * prefix[r];
    for (std::size_t c = 0; c < ring_len_; ++c) {
      const std::size_t oriented = r * ring_len_ + c;
      std::size_t original = oriented;
      if (transposed_) original = c * cols_ + r;
      const DenseTensor& rep = replacements[original];
      check_block(rep, chi);
      const DenseTensor oriented_rep = transposed_ ? rep.permuted(kTransposeBlock) : rep;
      const Matrix tr = transfer(r, c, &oriented_rep);
      out[original] = tr.cwiseProduct(env.transpose()).sum();
    }
  }
  return out;
}

DenseTensor double_layer_block(const DenseTensor& ket, const DenseTensor& bra, const Matrix* op) {
  if (ket.rank() != 5 || ket.shape() != bra.shape()) throw ShapeError("site tensors must match");
  const std::size_t D = ket.extent(0);
  const DenseTensor bra_c = bra.conjugated();
  DenseTensor out;
  if (op == nullptr) {
    out = contract({{&ket, {0, 1, 2, 3, 10}}, {&bra_c, {4, 5, 6, 7, 10}}}, {0, 4, 1, 5, 2, 6, 3, 7});
  } else {
    const std::size_t d = ket.extent(4);
    if (static_cast<std::size_t>(op->rows()) != d || static_cast<std::size_t>(op->cols()) != d) {
      throw ShapeError("operator must be d x d");
    }
    DenseTensor x(Shape{d, d});
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) x[i * d + j] = (*op)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    out = contract({{&ket, {0, 1, 2, 3, 10}}, {&x, {11, 10}}, {&bra_c, {4, 5, 6, 7, 11}}},
                   {0, 4, 1, 5, 2, 6, 3, 7});
  }
  return out.reshaped({D * D, D * D, D * D, D * D});
}

DenseTensor single_layer_block(const DenseTensor& ket, const Vector& phi) {
  if (ket.rank() != 5 || static_cast<std::size_t>(phi.size()) != ket.extent(4)) {
    throw ShapeError("product-state vector must have the physical dimension");
  }
  const std::size_t d = ket.extent(4);
  const std::size_t bonds = ket.size() / d;
  DenseTensor out(Shape{ket.extent(0), ket.extent(1), ket.extent(2), ket.extent(3)});
  for (std::size_t i = 0; i < bonds; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < d; ++j) s += std::conj(phi(static_cast<Eigen::Index>(j))) * ket[i * d + j];
    out[i] = s;
  }
  return out;
}

DenseTensor to_statevector(const TNState& state, std::uint64_t amplitude_cap) {
  const LatticeSpec& spec = state.spec();
  spec.validate(amplitude_cap);
  const bool transposed = spec.cols > spec.rows;
  const std::size_t ring_rows = transposed ? spec.cols : spec.rows;
  const std::size_t n = transposed ? spec.rows : spec.cols;
  const std::size_t V = spec.sites();
  const std::size_t d = spec.phys_dim;

  std::vector<DenseTensor> oriented(V);
  for (std::size_t k = 0; k < V; ++k) {
    const SiteCoord c = spec.coord(k);
    const std::size_t ok = transposed ? c.y * n + c.x : k;
    oriented[ok] = transposed ? state.local_tensor(k).permuted(kTransposeSite) : state.local_tensor(k);
  }
  auto row_tensor = [&](std::size_t r) {
    std::vector<const DenseTensor*> ptrs(n);
    for (std::size_t c = 0; c < n; ++c) ptrs[c] = &oriented[r * n + c];
    return ring(ptrs);  // (top, bottom, phys)
  };
  // Chain rows [begin, end) into (top, bottom, phys) with phys in site order.
  auto chain = [&](std::size_t begin, std::size_t end) {
    DenseTensor acc = row_tensor(begin);
    for (std::size_t r = begin + 1; r < end; ++r) {
      const DenseTensor next = row_tensor(r);
      acc = contract({{&acc, {0, 1, 2}}, {&next, {1, 3, 4}}}, {0, 3, 2, 4});
      acc = acc.reshaped({acc.extent(0), acc.extent(1), acc.extent(2) * acc.extent(3)});
    }
    return acc;
  };
  const std::size_t half = ring_rows / 2;
  const DenseTensor top = chain(0, half);
  const DenseTensor bottom = chain(half, ring_rows);
  DenseTensor psi = contract({{&top, {0, 1, 2}}, {&bottom, {1, 0, 3}}}, {2, 3});

  Shape legs(V, d);
  psi = psi.reshaped(legs);
  if (!transposed) return psi;
  std::vector<std::size_t> perm(V);
  for (std::size_t k = 0; k < V; ++k) {
    const SiteCoord c = spec.coord(k);
    perm[k] = c.y * n + c.x;
  }
  return psi.permuted(perm);
}

double norm_squared(const TNState& state) {
  const LatticeSpec& spec = state.spec();
  spec.validate();
  std::vector<DenseTensor> blocks;
  blocks.reserve(spec.sites());
  for (std::size_t k = 0; k < spec.sites(); ++k) {
    blocks.push_back(double_layer_block(state.local_tensor(k), state.local_tensor(k)));
  }
  return TorusNetwork(spec.rows, spec.cols, std::move(blocks)).value().real();
}

void check_product_state(const LatticeSpec& spec, std::span<const Vector> product_state) {
  if (product_state.size() != spec.sites()) throw InvalidArgument("one product-state vector per site required");
  for (const auto& v : product_state) {
    if (static_cast<std::size_t>(v.size()) != spec.phys_dim) {
      throw InvalidArgument("product-state vector has wrong dimension");
    }
    if (std::abs(v.norm() - 1.0) > 1e-10) throw InvalidArgument("product-state vector is not normalized");
  }
}

void check_observable(const LatticeSpec& spec, const Matrix& observable) {
  if (static_cast<std::size_t>(observable.rows()) != spec.phys_dim ||
      static_cast<std::size_t>(observable.cols()) != spec.phys_dim) {
    throw InvalidArgument("observable must be d x d");
  }
  if (hermiticity_defect(observable) > 1e-12) throw InvalidArgument("observable is not Hermitian");
}

Complex overlap(const TNState& state, std::span<const Vector> product_state) {
  const LatticeSpec& spec = state.spec();
  spec.validate();
  check_product_state(spec, product_state);
  std::vector<DenseTensor> blocks;
  blocks.reserve(spec.sites());
  for (std::size_t k = 0; k < spec.sites(); ++k) {
    blocks.push_back(single_layer_block(state.local_tensor(k), product_state[k]));
  }
  return TorusNetwork(spec.rows, spec.cols, std::move(blocks)).value();
}

double local_expectation(const TNState& state, std::size_t site, const Matrix& observable) {
  const LatticeSpec& spec = state.spec();
  spec.validate();
  if (site >= spec.sites()) throw InvalidArgument("site index out of range");
  check_observable(spec, observable);
  std::vector<DenseTensor> blocks;
  blocks.reserve(spec.sites());
  for (std::size_t k = 0; k < spec.sites(); ++k) {
    const DenseTensor& a = state.local_tensor(k);
    blocks.push_back(double_layer_block(a, a, k == site ? &observable : nullptr));
  }
  return TorusNetwork(spec.rows, spec.cols, std::move(blocks)).value().real();
}

}  // namespace rtnlab
