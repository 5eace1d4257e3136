// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "rtnlab/error.hpp"
#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"

using namespace rtnlab;

namespace {

constexpr Spin dn = Spin::down;
constexpr Spin up = Spin::up;

// Reference values of Z - 1 (f-table, D = d = 2) from an exact-fraction enumeration
// written independently of this library.
struct Frozen {
  std::size_t rows, cols;
  double z_minus_one;
};
constexpr Frozen kFrozen[] = {
    {2, 2, 0.09749024326283802},  {2, 3, 0.053458871015048},      {3, 3, 0.009656377577423925},
    {3, 4, 0.0054919032884696755}, {4, 4, 0.0009973210685381058},
};

}  // namespace

TEST(WeightTables, FTableValues) {
  const WeightTable f = f_table(2, 2);
  EXPECT_EQ(f(dn, dn, dn), 1.0);
  EXPECT_EQ(f(up, dn, dn), 0.0);
  EXPECT_NEAR(f(dn, dn, up), 30.0 / 63.0, 1e-15);
  EXPECT_NEAR(f(dn, up, up), 12.0 / 63.0, 1e-15);
  EXPECT_NEAR(f(up, dn, up), 12.0 / 63.0, 1e-15);
  EXPECT_NEAR(f(up, up, up), 30.0 / 63.0, 1e-15);
  EXPECT_THROW(f_table(1, 2), InvalidArgument);
  EXPECT_THROW(f_table(2, 1), InvalidArgument);
}

TEST(WeightTables, FTableInvariants) {
  for (std::size_t D : {2u, 3u, 4u})
    for (std::size_t d : {2u, 3u, 4u}) {
      const WeightTable f = f_table(D, d);
      EXPECT_EQ(f(dn, dn, up), f(dn, up, dn));
      EXPECT_EQ(f(up, dn, up), f(up, up, dn));
      for (double e : f.entries) {
        EXPECT_GE(e, 0.0);
        EXPECT_LE(e, 1.0);
      }
      // every entry other than the ground entry is below one
      for (unsigned i = 1; i < 8; ++i) EXPECT_LT(f.entries[i], 1.0);
    }
}

TEST(WeightTables, GTableValues) {
  const WeightTable g = g_table(2, 2);
  EXPECT_NEAR(g(dn, dn, dn), 15.5 / 63.0, 1e-15);
  EXPECT_NEAR(g(dn, dn, up), 7.0 / 63.0, 1e-15);
  EXPECT_NEAR(g(up, dn, dn), 2.0 / 63.0, 1e-15);
  EXPECT_LT(2.0 * g(dn, dn, dn), 1.0);
  for (std::size_t D : {2u, 3u})
    for (std::size_t d : {2u, 3u}) {
      const WeightTable t = g_table(D, d);
      EXPECT_EQ(t(dn, dn, dn), t(up, up, up));
      EXPECT_EQ(t(dn, dn, up), t(up, dn, up));
      EXPECT_EQ(t(dn, dn, up), t(dn, up, dn));
      EXPECT_EQ(t(up, dn, dn), t(dn, up, up));
      EXPECT_EQ(t.max_entry(), t(dn, dn, dn));
    }
}

TEST(IsingForm, BottomLayerSumReproducesTables) {
  for (std::size_t D : {2u, 3u})
    for (std::size_t d : {2u, 3u})
      for (WeightKind kind : {WeightKind::norm_f, WeightKind::global_g}) {
        const WeightTable t = weight_table(kind, D, d);
        const IsingCouplings c = IsingCouplings::for_kind(kind, D, d);
        EXPECT_NEAR(c.j2.imag(), std::numbers::pi, 1e-15);
        EXPECT_NEAR(c.j2.real(), std::log(static_cast<double>(D * D * d)), 1e-15);
        for (unsigned i = 0; i < 8; ++i) {
          const Spin a = static_cast<Spin>((i >> 2) & 1u), b = static_cast<Spin>((i >> 1) & 1u),
                     e = static_cast<Spin>(i & 1u);
          const Complex w = summed_site_weight(c, a, b, e);
          EXPECT_NEAR(w.real(), t.entries[i], 1e-12);
          EXPECT_NEAR(w.imag(), 0.0, 1e-12);
          for (Spin bottom : {dn, up}) {
            const Complex x = two_layer_site_weight(c, bottom, a, b, e);
            EXPECT_TRUE(std::isfinite(std::abs(x)));
            EXPECT_GT(std::abs(x), 0.0);
          }
        }
      }
}

TEST(SpinConfig, Amplitudes) {
  const WeightTable f = f_table(2, 2);
  EXPECT_EQ(config_amplitude(SpinConfig(3, 3), f), 1.0);
  SpinConfig single(3, 3);
  single.set(1, 1, up);
  EXPECT_EQ(config_amplitude(single, f), 0.0);
  // one winding row of up spins: 3 sites (up, up, down), 3 sites above (down, down, up)
  SpinConfig row(3, 3);
  for (std::size_t y = 0; y < 3; ++y) row.set(1, y, up);
  const double expect = std::pow(f(up, up, dn), 3) * std::pow(f(dn, dn, up), 3);
  EXPECT_NEAR(config_amplitude(row, f), expect, 1e-15);
  EXPECT_EQ(classify_config(row), ConfigClass::valid);
}

TEST(SpinConfig, Classification) {
  EXPECT_EQ(classify_config(SpinConfig(3, 3)), ConfigClass::ground);
  SpinConfig single(3, 3);
  single.set(0, 2, up);
  EXPECT_EQ(classify_config(single), ConfigClass::zero);
  SpinConfig column(3, 3);
  for (std::size_t x = 0; x < 3; ++x) column.set(x, 1, up);
  EXPECT_EQ(classify_config(column), ConfigClass::valid);
}

TEST(SpinConfig, ZeroAmplitudeIffZeroClass) {
  const WeightTable f = f_table(2, 2);
  for (std::size_t L : {2u, 3u}) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (L * L)); ++b) {
      const SpinConfig c = SpinConfig::from_bits(L, L, b);
      ASSERT_EQ(config_amplitude(c, f) == 0.0, classify_config(c) == ConfigClass::zero) << b;
      ASSERT_EQ(c.bits(), b);
    }
  }
}

TEST(SpinConfig, AreaUpperPerimeterBound) {
  for (std::size_t D : {2u, 3u})
    for (std::size_t d : {2u, 3u}) {
      const WeightTable f = f_table(D, d);
      const double qa = f(up, up, up), qp = f(dn, dn, up), qu = qp * qp;
      for (std::size_t L : {2u, 3u}) {
        for (const SpinConfig& c : enumerate_toric(L)) {
          const PolyominoStats s = stats(Polyomino::toric(c));
          const double a = config_amplitude(c, f);
          const double mp = std::pow(qa, s.m) * std::pow(qp, s.p);
          ASSERT_LE(a, mp * (1 + 1e-12));
          ASSERT_LE(mp, std::pow(qa, s.m) * std::pow(qu, s.n) * (1 + 1e-12));
        }
      }
    }
}

TEST(PartitionFunction, MatchesIndependentEnumeration) {
  const WeightTable f = f_table(2, 2);
  for (const auto& fr : kFrozen) {
    const PartitionResult r = exact_partition_function(fr.rows, fr.cols, f, 1);
    EXPECT_NEAR(r.z_minus_one, fr.z_minus_one, 1e-14) << fr.rows << "x" << fr.cols;
    EXPECT_NEAR(r.z, 1.0 + fr.z_minus_one, 1e-14);
    EXPECT_LT(std::abs(r.two_layer_imag), 1e-10);
    EXPECT_GE(r.z, 1.0);
  }
}

TEST(PartitionFunction, GrayCodeMatchesDirectSum) {
  for (WeightKind kind : {WeightKind::norm_f, WeightKind::global_g}) {
    const WeightTable t = weight_table(kind, 3, 2);
    double direct = 0.0;
    for (std::uint64_t b = 0; b < (1u << 12); ++b) direct += config_amplitude(SpinConfig::from_bits(3, 4, b), t);
    const PartitionResult r = exact_partition_function(3, 4, t, 3);
    EXPECT_NEAR(r.z, direct, 1e-13 * direct);
  }
}

TEST(PartitionFunction, WorkerCountDoesNotChangeResult) {
  const WeightTable f = f_table(2, 2);
  const PartitionResult a = exact_partition_function(4, 4, f, 1);
  const PartitionResult b = exact_partition_function(4, 4, f, 4);
  EXPECT_EQ(a.z, b.z);
  EXPECT_EQ(a.nonzero_configs, b.nonzero_configs);
}

TEST(PartitionFunction, Decreasing) {
  const WeightTable f = f_table(2, 2);
  EXPECT_LT(exact_partition_function(3, 3, f).z_minus_one, exact_partition_function(2, 2, f).z_minus_one);
}

TEST(PartitionFunction, GlobalSumBound) {
  for (std::size_t L : {2u, 3u, 4u}) {
    const WeightTable g = g_table(2, 2);
    const double v = static_cast<double>(L * L);
    const PartitionResult r = exact_partition_function(L, L, g);
    EXPECT_LE(r.z, std::pow(2.0, v) * std::pow(g.max_entry(), v - 1.0));
  }
}

TEST(PartitionFunction, Cap) {
  EXPECT_THROW(exact_partition_function(4, 7, f_table(2, 2)), ResourceLimit);
  EXPECT_THROW(exact_partition_function(1, 4, f_table(2, 2)), InvalidArgument);
}

TEST(MonteCarlo, SecondMomentAgreesWithEnumeration) {
  const LatticeSpec s{2, 2, 2, 2};
  const MomentEstimate m = mc_second_moment(s, 3000, 2024);
  const double z = exact_partition_function(2, 2, f_table(2, 2)).z;
  EXPECT_LT(std::abs(m.second_moment - z), 3.0 * m.second_moment_se);
  EXPECT_GE(m.second_moment, 1.0 - 3.0 * m.second_moment_se);
  EXPECT_LT(std::abs(m.mean_norm - 1.0), 3.0 * m.mean_norm_se);
}

TEST(MonteCarlo, WorkerIndependent) {
  const LatticeSpec s{2, 2, 2, 2};
  const MomentEstimate a = mc_second_moment(s, 50, 9, 1);
  const MomentEstimate b = mc_second_moment(s, 50, 9, 3);
  EXPECT_EQ(a.norms, b.norms);
}
