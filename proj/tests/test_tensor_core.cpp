// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "rtnlab/contract.hpp"
#include "rtnlab/error.hpp"
#include "rtnlab/haar.hpp"
#include "rtnlab/second_moment.hpp"

using namespace rtnlab;

namespace {

DenseTensor random_tensor(Shape shape, Rng& rng) {
  std::normal_distribution<double> g;
  DenseTensor t(std::move(shape));
  for (auto& x : t.data()) x = Complex(g(rng), g(rng));
  return t;
}

DenseTensor from_matrix(const Matrix& m) {
  const auto r = static_cast<std::size_t>(m.rows());
  const auto c = static_cast<std::size_t>(m.cols());
  DenseTensor t(Shape{r, c});
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) t[i * c + j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return t;
}

}  // namespace

TEST(DenseTensor, ShapeAndEntries) {
  DenseTensor t(Shape{2, 3});
  EXPECT_EQ(t.size(), 6u);
  t.at({1, 2}) = Complex(4.0, 1.0);
  EXPECT_EQ(t[5], Complex(4.0, 1.0));
  EXPECT_THROW(DenseTensor(Shape{2, 2}, std::vector<Complex>(3)), InvalidArgument);
  EXPECT_THROW(DenseTensor(Shape{1}, {Complex(NAN, 0.0)}), InvalidArgument);
}

TEST(DenseTensor, PermuteAndReshape) {
  Rng rng = make_rng(1);
  const DenseTensor t = random_tensor({2, 3, 4}, rng);
  const std::vector<std::size_t> perm{2, 0, 1};
  const DenseTensor p = t.permuted(perm);
  EXPECT_EQ(p.shape(), (Shape{4, 2, 3}));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(p.at({c, a, b}), t.at({a, b, c}));
  EXPECT_THROW(t.reshaped({5, 5}), ShapeError);
}

TEST(Contract, TraceOfIdentity) {
  const DenseTensor id = DenseTensor::identity(8);
  const DenseTensor r = contract({{&id, {0, 0}}}, {});
  EXPECT_NEAR(std::abs(r.scalar_value() - Complex(8.0)), 0.0, 1e-14);
}

TEST(Contract, UnitaryTimesAdjointIsIdentity) {
  Rng rng = make_rng(2);
  const Matrix u = haar_unitary(6, rng).matrix();
  const DenseTensor a = from_matrix(u);
  const DenseTensor b = from_matrix(u.adjoint());
  const DenseTensor r = contract({{&a, {0, 1}}, {&b, {1, 2}}}, {0, 2});
  EXPECT_LT(r.max_abs_diff(DenseTensor::identity(6)), 1e-12);
}

TEST(Contract, MatchesExplicitLoops) {
  Rng rng = make_rng(3);
  const DenseTensor a = random_tensor({2, 3, 4}, rng);
  const DenseTensor b = random_tensor({4, 3, 5}, rng);
  const DenseTensor r = contract({{&a, {0, 1, 2}}, {&b, {2, 1, 3}}}, {3, 0});
  for (std::size_t e = 0; e < 5; ++e) {
    for (std::size_t i = 0; i < 2; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 4; ++k) s += a.at({i, j, k}) * b.at({k, j, e});
      EXPECT_LT(std::abs(r.at({e, i}) - s), 1e-12);
    }
  }
}

TEST(Contract, InternalTraceAndOuterProduct) {
  Rng rng = make_rng(4);
  const DenseTensor a = random_tensor({3, 2, 3}, rng);
  const DenseTensor r = contract({{&a, {0, 1, 0}}}, {1});
  for (std::size_t j = 0; j < 2; ++j) {
    Complex s{};
    for (std::size_t i = 0; i < 3; ++i) s += a.at({i, j, i});
    EXPECT_LT(std::abs(r.at({j}) - s), 1e-13);
  }
  const DenseTensor v = random_tensor({2}, rng);
  const DenseTensor w = random_tensor({3}, rng);
  const DenseTensor o = contract({{&v, {0}}, {&w, {1}}}, {1, 0});
  EXPECT_LT(std::abs(o.at({2, 1}) - v.at({1}) * w.at({2})), 1e-14);
}

TEST(Contract, OrderIndependence) {
  Rng rng = make_rng(5);
  const DenseTensor a = random_tensor({3, 4, 5}, rng);
  const DenseTensor b = random_tensor({5, 6, 3}, rng);
  const DenseTensor c = random_tensor({6, 4, 2}, rng);
  const std::vector<Operand> ops{{&a, {0, 1, 2}}, {&b, {2, 3, 0}}, {&c, {3, 1, 4}}};
  const std::vector<Operand> rev{{&c, {3, 1, 4}}, {&b, {2, 3, 0}}, {&a, {0, 1, 2}}};
  const std::vector<Label> out{4};
  const DenseTensor g = contract(ops, out, ContractionOrder::greedy);
  const DenseTensor l = contract(ops, out, ContractionOrder::left_to_right);
  const DenseTensor r = contract(rev, out, ContractionOrder::left_to_right);
  EXPECT_LT(g.max_abs_diff(l), 1e-10 * l.max_abs());
  EXPECT_LT(r.max_abs_diff(l), 1e-10 * l.max_abs());
}

TEST(Contract, Multilinear) {
  Rng rng = make_rng(6);
  const DenseTensor a = random_tensor({3, 4}, rng);
  const DenseTensor b = random_tensor({4, 2}, rng);
  const DenseTensor a2 = Complex(0.5, -2.0) * a;
  const DenseTensor r1 = contract({{&a, {0, 1}}, {&b, {1, 2}}}, {0, 2});
  const DenseTensor r2 = contract({{&a2, {0, 1}}, {&b, {1, 2}}}, {0, 2});
  EXPECT_LT((Complex(0.5, -2.0) * r1).max_abs_diff(r2), 1e-13);
}

TEST(Contract, Errors) {
  const DenseTensor a(Shape{2, 3});
  const DenseTensor b(Shape{4, 2});
  EXPECT_THROW(contract({{&a, {0, 1}}, {&b, {1, 2}}}, {0, 2}), ShapeError);
  EXPECT_THROW(contract({{&a, {0, 1}}}, {0, 1, 7}), InvalidArgument);
  EXPECT_THROW(contract({{&a, {0, 1}}}, {0}), InvalidArgument);
  EXPECT_THROW(contract({{&a, {0, 1}}, {&a, {0, 1}}, {&a, {0, 1}}}, {}), InvalidArgument);
}

TEST(Haar, DimensionOneIsAPhase) {
  Rng rng = make_rng(7);
  const UnitaryMatrix u = haar_unitary(1, rng);
  EXPECT_NEAR(std::abs(u.matrix()(0, 0)), 1.0, 1e-14);
  EXPECT_THROW(haar_unitary(0, rng), InvalidArgument);
}

TEST(Haar, UnitarityAndMoments) {
  Rng rng = make_rng(8);
  const std::size_t n = 8;
  const int samples = 10000;
  double sum_sq = 0.0;
  double sum_sq2 = 0.0;
  Matrix mean = Matrix::Zero(n, n);
  for (int s = 0; s < samples; ++s) {
    const Matrix u = haar_unitary(n, rng).matrix();
    ASSERT_LT(unitarity_defect(u), 1e-12);
    const double v = std::norm(u(1, 2));
    sum_sq += v;
    sum_sq2 += v * v;
    mean += u;
  }
  const double m = sum_sq / samples;
  const double se = std::sqrt((sum_sq2 / samples - m * m) / (samples - 1));
  EXPECT_LT(std::abs(m - 1.0 / n), 3.0 * se);
  mean /= static_cast<double>(samples);
  EXPECT_LT(mean.cwiseAbs().maxCoeff(), 5.0 / std::sqrt(static_cast<double>(samples)) / std::sqrt(8.0));
}

TEST(Haar, FromMatrixRejectsNonUnitary) {
  Matrix m = Matrix::Identity(3, 3);
  m(0, 1) = 0.1;
  EXPECT_THROW(UnitaryMatrix::from_matrix(m), InvalidArgument);
}

TEST(RandomHermitian, IsHermitianWithRealSpectrum) {
  Rng rng = make_rng(9);
  for (int s = 0; s < 100; ++s) {
    const Matrix h = random_hermitian(8, rng);
    ASSERT_LT(hermiticity_defect(h), 1e-14);
    Eigen::ComplexEigenSolver<Matrix> es(h);
    ASSERT_LT(es.eigenvalues().imag().cwiseAbs().maxCoeff(), 1e-10);
  }
  const Matrix one = random_hermitian(1, rng);
  EXPECT_EQ(one(0, 0).imag(), 0.0);
  EXPECT_THROW(random_hermitian(0, rng), InvalidArgument);
}

TEST(RandomHermitian, ExponentialIsUnitary) {
  Rng rng = make_rng(10);
  const Matrix h = random_hermitian(6, rng);
  EXPECT_LT(unitarity_defect(unitary_exponential(h, 0.7)), 1e-12);
  EXPECT_LT((unitary_exponential(h, 0.0) - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(SecondMoment, Weights) {
  const auto w = SecondMomentWeights::for_dim(8);
  EXPECT_DOUBLE_EQ(w.w_same, 1.0 / 63.0);
  EXPECT_DOUBLE_EQ(w.w_cross, -1.0 / (8.0 * 63.0));
  EXPECT_GT(w.w_same, 0.0);
  EXPECT_LT(w.w_cross, 0.0);
  EXPECT_LT(std::abs(w.w_cross), w.w_same);
  EXPECT_THROW(SecondMomentWeights::for_dim(1), InvalidArgument);
}

namespace {

DenseTensor product_input(const Matrix& r1, const Matrix& r2) {
  const auto n = static_cast<std::size_t>(r1.rows());
  DenseTensor x(Shape{n, n, n, n});
  std::size_t f = 0;
  for (Eigen::Index a = 0; a < r1.rows(); ++a)
    for (Eigen::Index ap = 0; ap < r1.rows(); ++ap)
      for (Eigen::Index b = 0; b < r1.rows(); ++b)
        for (Eigen::Index bp = 0; bp < r1.rows(); ++bp) x[f++] = r1(a, ap) * r2(b, bp);
  return x;
}

}  // namespace

TEST(SecondMoment, TracePreservingAndSymmetric) {
  const std::size_t n = 4;
  const auto w = SecondMomentWeights::for_dim(n);
  Rng rng = make_rng(11);
  Vector v1 = haar_unitary(n, rng).matrix().col(0);
  Vector v2 = haar_unitary(n, rng).matrix().col(0);
  const DenseTensor x = product_input(v1 * v1.adjoint(), v2 * v2.adjoint());
  const DenseTensor y = second_moment_channel(w, x);
  Complex tr{};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tr += y.at({a, a, b, b});
  EXPECT_NEAR(std::abs(tr - Complex(1.0)), 0.0, 1e-12);

  const DenseTensor xs = product_input(v2 * v2.adjoint(), v1 * v1.adjoint());
  const DenseTensor ys = second_moment_channel(w, xs);
  const std::vector<std::size_t> swap{2, 3, 0, 1};
  EXPECT_LT(ys.max_abs_diff(y.permuted(swap)), 1e-13);
  EXPECT_LT(ys.max_abs_diff(y), 1e-13);
  EXPECT_THROW(second_moment_channel(w, DenseTensor(Shape{3, 3, 3, 3})), ShapeError);
}

TEST(SecondMoment, MatchesMonteCarloSmall) {
  // The full 1e5-sample comparison at N = 8 lives in the acceptance run.
  const std::size_t n = 4;
  const auto w = SecondMomentWeights::for_dim(n);
  Matrix rho = Matrix::Zero(n, n);
  rho(0, 0) = 1.0;
  const DenseTensor x = product_input(rho, rho);
  const DenseTensor exact = second_moment_channel(w, x);
  Rng rng = make_rng(12);
  const int samples = 20000;
  DenseTensor acc(Shape{n, n, n, n});
  for (int s = 0; s < samples; ++s) {
    const Vector c = haar_unitary(n, rng).matrix().col(0);
    std::size_t f = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t ap = 0; ap < n; ++ap)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t bp = 0; bp < n; ++bp) {
            acc[f++] += c(static_cast<Eigen::Index>(a)) * std::conj(c(static_cast<Eigen::Index>(ap))) *
                        c(static_cast<Eigen::Index>(b)) * std::conj(c(static_cast<Eigen::Index>(bp)));
          }
  }
  acc *= Complex(1.0 / samples);
  EXPECT_LT(acc.max_abs_diff(exact), 1e-2);
}
