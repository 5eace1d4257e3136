// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "rtnlab/bounds.hpp"
#include "rtnlab/error.hpp"
#include "rtnlab/loss.hpp"
#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"
#include "rtnlab/variance.hpp"

using namespace rtnlab;

TEST(Report, SlackAndSatisfaction) {
  const BoundReport a = make_report("x", "L=2", 2.0, 1.0);
  EXPECT_TRUE(a.satisfied);
  EXPECT_EQ(a.slack, 2.0);
  const BoundReport b = make_report("x", "L=2", 1.0, 2.0);
  EXPECT_FALSE(b.satisfied);
  EXPECT_TRUE(std::isinf(make_report("x", "", 1.0, 0.0).slack));
}

TEST(Theorem1, ChainInputs) {
  const Theorem1Chain c = theorem1_chain(3, 2, 2);
  EXPECT_LE(c.q_a, 0.5);
  EXPECT_LE(c.p_u, 0.25);
  EXPECT_NEAR(c.q_a, 30.0 / 63.0, 1e-15);
  EXPECT_NEAR(c.p_u, std::pow(30.0 / 63.0, 2), 1e-15);
  EXPECT_EQ(c.eta, 25.0 / 26.0);
  EXPECT_NEAR(c.g_value, gen_fun_G(c.q_a / c.eta, c.p_u), 1e-15);
  EXPECT_LE(gen_fun_G(0.54, 0.25), 2.9);
  EXPECT_NEAR(c.inner, 9.0 / c.p_u * std::pow(c.eta, 3) * c.g_value, 1e-12);
  EXPECT_NEAR(c.log_bound, std::log(3.0 / (1.0 - c.p_u)) + 3.0 * std::log(c.inner), 1e-12);
}

TEST(Theorem1, ExactBelowChain) {
  double previous = INFINITY;
  for (std::size_t L : {2u, 3u, 4u}) {
    const Theorem1Chain c = theorem1_chain(L, 2, 2);
    ASSERT_TRUE(c.exact_z_minus_one.has_value());
    EXPECT_TRUE(c.report.satisfied);
    EXPECT_LT(*c.exact_z_minus_one, previous);
    previous = *c.exact_z_minus_one;
  }
  EXPECT_FALSE(theorem1_chain(6, 2, 2).exact_z_minus_one.has_value());
  EXPECT_FALSE(theorem1_chain(3, 2, 2, false).exact_z_minus_one.has_value());
}

TEST(Theorem1, AsymptoticRate) {
  for (std::size_t D : {2u, 3u})
    for (std::size_t d : {2u, 3u})
      for (std::size_t L : {1000u, 2000u}) EXPECT_TRUE(theorem1_rate(L, D, d).satisfied);
  // before the inner factor drops below one the chain grows with L
  EXPECT_FALSE(theorem1_rate(10, 2, 2).satisfied);
}

TEST(Theorem1, LargeLDoesNotOverflowLogDomain) {
  const Theorem1Chain c = theorem1_chain(50, 2, 2, false);
  EXPECT_TRUE(std::isfinite(c.log_bound));
  EXPECT_TRUE(std::isinf(c.bound) || c.bound > 0.0);
}

TEST(Theorem2, PerSiteRatio) {
  EXPECT_NEAR(theorem2_ratio(2, 2), 31.0 / 63.0, 1e-15);
  for (std::size_t D : {2u, 3u, 4u})
    for (std::size_t d : {2u, 3u, 4u}) EXPECT_LT(theorem2_ratio(D, d), 1.0);
  for (std::size_t L = 2; L < 6; ++L) EXPECT_LT(theorem2_bound(L + 1, 2, 2), theorem2_bound(L, 2, 2));
  EXPECT_NEAR(theorem2_bound(2, 2, 2, 3.0), 3.0 * 16.0 * std::pow(15.5 / 63.0, 3), 1e-15);
}

TEST(Theorem2, EmpiricalRatioWithinSlack) {
  const LossSpec loss = LossSpec::global(LossKind::global_pure, plus_state(2));
  const double v2 = variance_scan({2, 2, 2, 2}, loss, 400, 12).mean_variance();
  const double v3 = variance_scan({3, 3, 2, 2}, loss, 400, 12).mean_variance();
  EXPECT_LE(v3 / v2, std::pow(theorem2_ratio(2, 2), 5) * 10.0);
}

TEST(Theorem3, Profile) {
  const auto p = theorem3_profile({0, 1, 2, 5}, 2);
  EXPECT_EQ(p[0], 0.25);
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_LT(p[i], p[i - 1]);
  EXPECT_NEAR(p[3], std::pow(0.93, 5) / 4.0, 1e-15);
  EXPECT_THROW(theorem3_profile({0}, 1), InvalidArgument);
}

TEST(Theorem4, Floor) {
  const Theorem4Floor f = theorem4_floor(2, 2, 2.0);
  EXPECT_NEAR(f.basic, 2.0 / 63.0, 1e-15);
  EXPECT_NEAR(f.observable, 8.0 / 63.0, 1e-15);
  // 1/(D^2 d^2) asymptotics
  const double big = theorem4_floor(64, 2, 2.0).basic;
  EXPECT_NEAR(big * 64.0 * 64.0 * 4.0, 0.5, 1e-3);
  EXPECT_THROW(theorem4_floor(2, 2, 0.0), InvalidArgument);
  EXPECT_THROW(theorem4_floor(1, 2, 1.0), InvalidArgument);
}
