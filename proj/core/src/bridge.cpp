// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/bridge.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rtnlab/error.hpp"

namespace rtnlab {
namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

std::size_t index_of(const std::vector<Cell>& sorted, Cell c) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
}

}  // namespace

DirectedGraphOnTorus build_directed_graph(const SpinConfig& config) {
  const Polyomino poly = Polyomino::toric(config);
  const int L = static_cast<int>(poly.torus_size);
  DirectedGraphOnTorus g;
  g.torus_size = poly.torus_size;
  g.vertices = poly.cells;
  for (const Cell& c : g.vertices) {
    const Cell down{(c.x + 1) % L, c.y};
    const Cell right{c.x, (c.y + 1) % L};
    if (poly.contains(down)) {
      g.out.push_back(index_of(g.vertices, down));
    } else if (poly.contains(right)) {
      g.out.push_back(index_of(g.vertices, right));
    } else {
      throw InvalidArgument("not a toric polyomino: up-site (" + std::to_string(c.x) + ", " +
                            std::to_string(c.y) + ") has no up successor");
    }
  }
  return g;
}

std::vector<BridgeComponent> bridge_components(const SpinConfig& config, std::size_t root_rank) {
  const DirectedGraphOnTorus g = build_directed_graph(config);
  const std::size_t V = g.vertices.size();
  const int L = static_cast<int>(g.torus_size);

  std::vector<std::size_t> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < V; ++i) parent[find_root(parent, i)] = find_root(parent, g.out[i]);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < V; ++i) groups[find_root(parent, i)].push_back(i);

  std::vector<BridgeComponent> comps;
  for (const auto& [rep, members] : groups) {
    BridgeComponent comp;
    for (std::size_t i : members) comp.toric_cells.push_back(g.vertices[i]);
    std::sort(comp.toric_cells.begin(), comp.toric_cells.end());

    // Walk out-edges until a vertex repeats; the repeat lies on the cycle.
    std::vector<char> visited(V, 0);
    std::size_t v = members.front();
    while (!visited[v]) {
      visited[v] = 1;
      v = g.out[v];
    }
    const std::size_t start = v;
    do {
      comp.cycle.push_back(g.vertices[v]);
      v = g.out[v];
    } while (v != start);
    std::sort(comp.cycle.begin(), comp.cycle.end());
    comp.root = comp.cycle[root_rank % comp.cycle.size()];
    const std::size_t root = index_of(g.vertices, comp.root);

    std::vector<Cell> plane;
    for (std::size_t i : members) {
      int a = 0;
      int b = 0;
      for (std::size_t u = i; u != root; u = g.out[u]) {
        const Cell from = g.vertices[u];
        const Cell to = g.vertices[g.out[u]];
        if (to.x == (from.x + 1) % L && to.y == from.y) {
          ++a;
        } else {
          ++b;
        }
      }
      plane.push_back({-a, -b});
    }
    comp.plane = Polyomino::plane(std::move(plane), Cell{0, 0});
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<Polyomino> bridge_transform(const SpinConfig& config, std::size_t root_rank) {
  std::vector<Polyomino> out;
  for (auto& c : bridge_components(config, root_rank)) out.push_back(std::move(c.plane));
  return out;
}

BridgeLemmaReport verify_bridge_lemma(std::size_t L) {
  if (L < 2) throw InvalidArgument("torus side must be >= 2");
  if (L > kToricEnumerationCap) throw ResourceLimit("bridge lemma verification is capped at L = 4");
  BridgeLemmaReport r;
  r.torus_size = L;
  r.root_choices_checked = L <= 3;
  const std::uint64_t total = std::uint64_t{1} << (L * L);
  const auto Ld = static_cast<double>(L);

  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const SpinConfig config = SpinConfig::from_bits(L, L, bits);
    if (classify_config(config) != ConfigClass::valid) continue;
    ++r.valid_configs;
    auto fail = [&](const std::string& msg) { r.violations.push_back({bits, msg}); };

    const PolyominoStats whole = stats(Polyomino::toric(config));
    const auto comps = bridge_components(config);
    const std::size_t k = comps.size();
    std::size_t sum_m = 0;
    std::size_t sum_n = 0;
    std::vector<std::size_t> areas;
    for (const auto& c : comps) {
      const PolyominoStats s = stats(c.plane);
      sum_m += s.m;
      sum_n += s.n;
      areas.push_back(s.m);
      if (s.m < L) fail("component area " + std::to_string(s.m) + " < L");
      if (!is_directed(c.plane)) fail("plane output is not directed");
    }
    const double ratio = static_cast<double>(whole.m) / Ld;
    if (!(static_cast<double>(k) <= ratio && ratio <= Ld)) fail("k <= m/L <= L violated");
    if (sum_m != whole.m) fail("sum of areas " + std::to_string(sum_m) + " != m = " + std::to_string(whole.m));
    if (sum_n < whole.n || sum_n > whole.n + k) {
      fail("sum of upper perimeters " + std::to_string(sum_n) + " outside [n, n + k]");
    }

    if (r.root_choices_checked) {
      std::sort(areas.begin(), areas.end());
      std::size_t longest = 0;
      for (const auto& c : comps) longest = std::max(longest, c.cycle.size());
      for (std::size_t rank = 1; rank < longest; ++rank) {
        std::vector<std::size_t> other;
        std::size_t other_n = 0;
        for (const auto& p : bridge_transform(config, rank)) {
          const PolyominoStats s = stats(p);
          other.push_back(s.m);
          other_n += s.n;
        }
        std::sort(other.begin(), other.end());
        if (other != areas) fail("areas depend on the root choice");
        if (other_n < whole.n || other_n > whole.n + k) fail("upper perimeter slack exceeded for another root");
      }
    }
  }
  return r;
}

bool ToricCountReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const ToricCountRow& r) {
    return static_cast<double>(r.toric) <= r.bound;
  });
}

ToricCountReport toric_count_bound(std::size_t L, const PolyominoCounts& plane) {
  if (L < 2) throw InvalidArgument("torus side must be >= 2");
  if (L > kToricEnumerationCap) throw ResourceLimit("toric counting is capped at L = 4");
  const std::size_t M = L * L;
  if (plane.m_max() < M) throw InvalidArgument("plane counts must cover m up to L^2");
  const std::size_t N = M + L + 1;  // room for n + c

  using Table = std::vector<std::vector<double>>;
  Table a(M + 1, std::vector<double>(N + 1, 0.0));
  for (std::size_t m = L; m <= M; ++m) {
    for (std::size_t n = 0; n <= N; ++n) a[m][n] = static_cast<double>(M) * static_cast<double>(plane.at(m, n));
  }
  std::vector<Table> power{a};  // power[k-1]: ordered k-tuples
  for (std::size_t k = 2; k <= L; ++k) {
    Table next(M + 1, std::vector<double>(N + 1, 0.0));
    const Table& prev = power.back();
    for (std::size_t m1 = 0; m1 <= M; ++m1) {
      for (std::size_t n1 = 0; n1 <= N; ++n1) {
        if (prev[m1][n1] == 0.0) continue;
        for (std::size_t m2 = L; m1 + m2 <= M; ++m2) {
          for (std::size_t n2 = 0; n1 + n2 <= N; ++n2) next[m1 + m2][n1 + n2] += prev[m1][n1] * a[m2][n2];
        }
      }
    }
    power.push_back(std::move(next));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> toric;
  for (const SpinConfig& c : enumerate_toric(L)) {
    const PolyominoStats s = stats(Polyomino::toric(c));
    ++toric[{s.m, s.n}];
  }
  ToricCountReport r;
  r.torus_size = L;
  for (const auto& [key, count] : toric) {
    const auto [m, n] = key;
    double bound = 0.0;
    for (std::size_t k = 1; k <= m / L; ++k) {
      for (std::size_t c = 0; c <= k; ++c) {
        if (n + c <= N) bound += power[k - 1][m][n + c];
      }
    }
    r.rows.push_back({m, n, count, bound});
  }
  return r;
}

}  // namespace rtnlab
