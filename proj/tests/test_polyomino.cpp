// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "rtnlab/bridge.hpp"
#include "rtnlab/error.hpp"
#include "rtnlab/polyomino.hpp"
#include "rtnlab/series.hpp"

using namespace rtnlab;

namespace {

// Brute force over subsets of the box [-(M-1), 0]^2 containing the origin.
PolyominoCounts subset_oracle(std::size_t M) {
  PolyominoCounts out(M, M);
  const int w = static_cast<int>(M);
  std::vector<Cell> box;
  for (int x = -(w - 1); x <= 0; ++x)
    for (int y = -(w - 1); y <= 0; ++y)
      if (x != 0 || y != 0) box.push_back({x, y});
  std::vector<Cell> chosen{{0, 0}};
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    const std::set<Cell> s(chosen.begin(), chosen.end());
    bool directed = true;
    for (Cell c : chosen)
      if (!(c.x == 0 && c.y == 0) && !s.count({c.x + 1, c.y}) && !s.count({c.x, c.y + 1})) directed = false;
    if (directed) {
      std::size_t n = 0;
      for (Cell c : chosen) n += s.count({c.x - 1, c.y}) ? 0 : 1;
      ++out.at(chosen.size(), n);
    }
    if (chosen.size() == M) return;
    for (std::size_t i = start; i < box.size(); ++i) {
      chosen.push_back(box[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

SpinConfig config_from_rows(const std::vector<std::string>& rows) {
  SpinConfig c(rows.size(), rows.front().size());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = 0; y < rows[x].size(); ++y)
      if (rows[x][y] == '#') c.set(x, y, Spin::up);
  return c;
}

}  // namespace

TEST(PolyominoStats, SmallExamples) {
  EXPECT_EQ(stats(Polyomino::plane({{0, 0}})), (PolyominoStats{1, 4, 1}));
  EXPECT_EQ(stats(Polyomino::plane({{-1, 0}, {0, 0}})), (PolyominoStats{2, 6, 1}));
  EXPECT_EQ(stats(Polyomino::plane({{0, -1}, {0, 0}})), (PolyominoStats{2, 6, 2}));
  const Polyomino hex = example_hexomino();
  EXPECT_EQ(stats(hex), (PolyominoStats{6, 14, 3}));
  EXPECT_TRUE(is_directed(hex));
  EXPECT_FALSE(is_directed(Polyomino::plane({{0, 0}, {1, 1}})));
  EXPECT_THROW(stats(Polyomino::plane({})), InvalidArgument);
}

TEST(PolyominoStats, PerimeterAtLeastTwiceUpperPerimeter) {
  for_each_directed(8, [](const std::vector<Cell>&, const PolyominoStats& s) {
    ASSERT_GE(s.p, 2 * s.n);
    ASSERT_GE(s.n, 1u);
    ASSERT_LE(s.n, s.m);
  });
}

TEST(DirectedEnumeration, AgreesWithSubsetOracle) {
  const PolyominoCounts e = enumerate_directed(5);
  EXPECT_EQ(e, subset_oracle(5));
  const std::uint64_t totals[] = {1, 2, 5, 13, 35};
  for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(e.total(m), totals[m - 1]);
}

TEST(DirectedEnumeration, StatsMatchRecount) {
  for_each_directed(7, [](const std::vector<Cell>& cells, const PolyominoStats& s) {
    const Polyomino poly = Polyomino::plane(cells, Cell{0, 0});
    ASSERT_EQ(stats(poly), s);
    ASSERT_TRUE(is_directed(poly));
  });
  EXPECT_THROW(enumerate_directed(kDirectedEnumerationCap + 1), ResourceLimit);
}

TEST(Series, MatchesEnumeration) {
  EXPECT_EQ(series_coefficients(10, 10), enumerate_directed(10));
  const PolyominoCounts s = series_coefficients(7, 7);
  EXPECT_EQ(s.total(6), 96u);
  EXPECT_EQ(s.total(7), 267u);
  EXPECT_EQ(s.at(5, 3), 16u);
  EXPECT_EQ(s.at(5, 4), 7u);
  EXPECT_EQ(s.at(4, 2), 6u);
  EXPECT_THROW(series_coefficients(kSeriesCap + 1, 3), ResourceLimit);
}

TEST(GeneratingFunction, Values) {
  EXPECT_NEAR(gen_fun_G(0.54, 0.25), 2.89778788895641, 1e-12);
  EXPECT_NEAR(gen_fun_G(0.3, 0.25), 0.126785028619540, 1e-13);
  EXPECT_EQ(gen_fun_G(0.0, 0.7), 0.0);
  EXPECT_EQ(gen_fun_G(0.3, 0.0), 0.0);
  EXPECT_NEAR(gen_fun_singularity(0.0), 1.0, 1e-15);
  EXPECT_THROW(gen_fun_G(1.0, 0.0), DomainError);
  EXPECT_THROW(gen_fun_G(-0.1, 0.3), DomainError);
  EXPECT_THROW(gen_fun_G(0.1, -0.3), DomainError);
  EXPECT_THROW(gen_fun_G(gen_fun_singularity(0.25), 0.25), DomainError);
}

TEST(GeneratingFunction, TruncatedSeriesConverges) {
  const double q = 0.3, p = 0.25;
  const PolyominoCounts s = series_coefficients(20, 20);
  double partial = 0.0, last_term = 0.0;
  for (std::size_t m = 1; m <= 20; ++m) {
    last_term = 0.0;
    for (std::size_t n = 0; n <= 20; ++n) last_term += static_cast<double>(s.at(m, n)) * std::pow(p, n);
    last_term *= std::pow(q, m);
    partial += last_term;
  }
  const double ratio = q / gen_fun_singularity(p);
  const double tail = last_term * ratio / (1.0 - ratio);
  EXPECT_LT(gen_fun_G(q, p) - partial, 2.0 * tail);
  EXPECT_GE(gen_fun_G(q, p) - partial, 0.0);
}

TEST(Rendering, Hexomino) {
  EXPECT_EQ(render_ascii(example_hexomino()), "#..\n##.\n.##\n..#\n");
}

TEST(ToricEnumeration, Counts) {
  // L = 2: ground state excluded; valid sets are unions of full rows or full columns
  const auto two = enumerate_toric(2);
  for (const auto& c : two) EXPECT_EQ(classify_config(c), ConfigClass::valid);
  EXPECT_THROW(enumerate_toric(5), ResourceLimit);
  for (std::size_t L : {2u, 3u}) {
    std::uint64_t expect = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (L * L)); ++b)
      expect += classify_config(SpinConfig::from_bits(L, L, b)) == ConfigClass::valid ? 1 : 0;
    EXPECT_EQ(enumerate_toric(L).size(), expect);
  }
}

TEST(Bridge, WindingRow) {
  SpinConfig c(3, 3);
  for (std::size_t y = 0; y < 3; ++y) c.set(1, y, Spin::up);
  const auto comps = bridge_components(c);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].cycle.size(), 3u);
  EXPECT_EQ(stats(comps[0].plane), (PolyominoStats{3, 8, 3}));
  EXPECT_TRUE(is_directed(comps[0].plane));
  EXPECT_THROW(build_directed_graph(SpinConfig(2, 3)), InvalidArgument);
  SpinConfig lone(3, 3);
  lone.set(0, 0, Spin::up);
  EXPECT_THROW(build_directed_graph(lone), InvalidArgument);
}

TEST(Bridge, AreaFourteenExample) {
  const SpinConfig c = config_from_rows({".###.", "#####", "...#.", ".###.", ".#.#."});
  ASSERT_EQ(classify_config(c), ConfigClass::valid);
  const PolyominoStats ts = stats(Polyomino::toric(c));
  EXPECT_EQ(ts.m, 14u);
  EXPECT_EQ(ts.n, 5u);
  const auto comps = bridge_components(c);
  ASSERT_EQ(comps.size(), 1u);
  const PolyominoStats ps = stats(comps[0].plane);
  EXPECT_EQ(ps.m, 14u);
  EXPECT_GE(ps.n, ts.n);
  EXPECT_LE(ps.n, ts.n + 1);
  EXPECT_TRUE(is_directed(comps[0].plane));
}

TEST(Bridge, LemmaExhaustive) {
  for (std::size_t L : {2u, 3u}) {
    const BridgeLemmaReport r = verify_bridge_lemma(L);
    EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front().message);
    EXPECT_TRUE(r.root_choices_checked);
    EXPECT_EQ(r.valid_configs, enumerate_toric(L).size());
  }
}

TEST(Bridge, ToricCountBound) {
  const ToricCountReport r = toric_count_bound(3, series_coefficients(9, 9));
  EXPECT_TRUE(r.ok());
  std::uint64_t total = 0;
  for (const auto& row : r.rows) {
    EXPECT_LE(static_cast<double>(row.toric), row.bound);
    total += row.toric;
  }
  EXPECT_EQ(total, enumerate_toric(3).size());
}
