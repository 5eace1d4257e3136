// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/haar.hpp"

#include <cmath>
#include <limits>

#include "rtnlab/error.hpp"

namespace rtnlab {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x5851f42du};
  return Rng(seq);
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& h) {
  if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix m, double tolerance) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw InvalidArgument("unitary must be square and nonempty");
  if (!(unitarity_defect(m) <= tolerance)) throw InvalidArgument("matrix is not unitary");
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(Matrix::Identity(n, n));
}

namespace {

Matrix ginibre(std::size_t dim, Rng& rng, double sigma) {
  std::normal_distribution<double> normal(0.0, sigma);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix a(n, n);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

}  // namespace

UnitaryMatrix haar_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw InvalidArgument("haar_unitary: dim must be >= 1");
  const Matrix a = ginibre(dim, rng, std::sqrt(0.5));
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0);
  }
  return UnitaryMatrix::from_matrix(std::move(q));
}

Matrix random_hermitian(std::size_t dim, Rng& rng) {
  if (dim == 0) throw InvalidArgument("random_hermitian: dim must be >= 1");
  const Matrix a = ginibre(dim, rng, 1.0);
  Matrix h = (a + a.adjoint()) * 0.5;
  // Exact symmetry; the sum above is already Hermitian but diagonal imaginary parts may be -0.
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return h;
}

Matrix unitary_exponential(const Matrix& hermitian, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
  const auto& vals = eig.eigenvalues();
  Eigen::VectorXcd phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) phases(i) = std::polar(1.0, -theta * vals(i));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace rtnlab
