// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "rtnlab/dense_tensor.hpp"

namespace rtnlab {

using Rng = std::mt19937_64;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Independent stream for `(seed, stream)`; identical arguments give identical streams.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Square matrix with U^dagger U = 1 to within the tolerance it was checked against.
class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws InvalidArgument unless `m` is square and unitary within `tolerance`
  /// (largest absolute entry of U^dagger U - 1).
  static UnitaryMatrix from_matrix(Matrix m, double tolerance = kTolerance);
  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  explicit UnitaryMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Largest absolute entry of U^dagger U - 1.
double unitarity_defect(const Matrix& u);
/// Largest absolute entry of H - H^dagger.
double hermiticity_defect(const Matrix& h);

/// Haar-distributed unitary: complex Ginibre matrix, Householder QR, and the phases of
/// diag(R) moved into Q so the result is exactly Haar rather than QR-biased.
UnitaryMatrix haar_unitary(std::size_t dim, Rng& rng);

/// (A + A^dagger)/2 with A having i.i.d. standard complex Gaussian entries.
Matrix random_hermitian(std::size_t dim, Rng& rng);

/// exp(-i theta H) for Hermitian H.
Matrix unitary_exponential(const Matrix& hermitian, double theta);

}  // namespace rtnlab
