// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtnlab/dense_tensor.hpp"
#include "rtnlab/haar.hpp"
#include "rtnlab/state.hpp"

namespace rtnlab {

/// A closed network of four-leg blocks (up, left, down, right) on a periodic grid.
/// Down of (x, y) joins up of (x+1, y); right of (x, y) joins left of (x, y+1).
///
/// Contracted exactly as a trace of row transfer matrices. Rings run along the shorter
/// side of the grid, so the transfer dimension is chi^min(rows, cols).
class TorusNetwork {
 public:
  static constexpr std::size_t kMaxTransferDim = 4096;

  /// `blocks` in row-major site order, all with the same bond extent.
  /// Throws ResourceLimit when the transfer dimension exceeds kMaxTransferDim.
  TorusNetwork(std::size_t rows, std::size_t cols, std::vector<DenseTensor> blocks);

  Complex value() const;

  /// Entry k is the network value with block k swapped for `replacements[k]`.
  std::vector<Complex> replaced_values(std::span<const DenseTensor> replacements) const;

 private:
  std::size_t oriented_index(std::size_t k) const;
  Matrix transfer(std::size_t row, std::size_t replaced_col, const DenseTensor* replacement) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool transposed_ = false;
  std::size_t ring_rows_ = 0;
  std::size_t ring_len_ = 0;
  std::vector<DenseTensor> blocks_;  // oriented, row-major
};

/// Block for <Psi| X |Psi> at one site: legs (up, left, down, right), each of extent D^2
/// with the ket index major. `op` = nullptr means the identity.
DenseTensor double_layer_block(const DenseTensor& ket, const DenseTensor& bra, const Matrix* op = nullptr);

/// Block for <phi|Psi> at one site: the physical leg contracted with conj(phi).
DenseTensor single_layer_block(const DenseTensor& ket, const Vector& phi);

/// Dense amplitudes, one leg of extent d per site in row-major site order.
DenseTensor to_statevector(const TNState& state,
                           std::uint64_t amplitude_cap = LatticeSpec::kDefaultAmplitudeCap);

double norm_squared(const TNState& state);

/// <phi|Psi> for |phi> = (x)_k |phi_k>. Throws InvalidArgument unless every phi_k has
/// dimension d and unit norm within 1e-10.
Complex overlap(const TNState& state, std::span<const Vector> product_state);

/// Unnormalized <Psi| O_site |Psi>. Throws InvalidArgument unless O is d x d and Hermitian
/// within 1e-12.
double local_expectation(const TNState& state, std::size_t site, const Matrix& observable);

/// Shared validation for the two functions above.
void check_product_state(const LatticeSpec& spec, std::span<const Vector> product_state);
void check_observable(const LatticeSpec& spec, const Matrix& observable);

}  // namespace rtnlab
