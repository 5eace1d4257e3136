// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"

namespace rtnlab {

/// One out-edge per up-site: to (x+1, y) if that site is up, else to (x, y+1).
struct DirectedGraphOnTorus {
  std::size_t torus_size = 0;
  std::vector<Cell> vertices;    ///< sorted
  std::vector<std::size_t> out;  ///< out[i] indexes vertices
};

/// Throws InvalidArgument for a non-square configuration or an up-site with no up successor.
DirectedGraphOnTorus build_directed_graph(const SpinConfig& config);

struct BridgeComponent {
  std::vector<Cell> toric_cells;  ///< sorted
  std::vector<Cell> cycle;        ///< sorted
  Cell root;
  Polyomino plane;  ///< root at (0, 0), other cells at x, y <= 0
};

/// Steps: out-edge graph, weak components, a root on each component's cycle, and backtrace
/// (a vertex that reaches the root with a x-moves and b y-moves goes to (-a, -b)).
/// The root is cycle[root_rank % cycle.size()]; rank 0 is the lexicographically smallest.
std::vector<BridgeComponent> bridge_components(const SpinConfig& config, std::size_t root_rank = 0);

/// Plane polyominoes of bridge_components, in component order.
std::vector<Polyomino> bridge_transform(const SpinConfig& config, std::size_t root_rank = 0);

struct BridgeViolation {
  std::uint64_t bits = 0;
  std::string message;
};

struct BridgeLemmaReport {
  std::size_t torus_size = 0;
  std::uint64_t valid_configs = 0;
  bool root_choices_checked = false;
  std::vector<BridgeViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive check over all valid L x L configurations of
///   k <= m/L <= L, m_i >= L, sum m_i = m, n <= sum n_i <= n + k, plane outputs directed.
/// For L <= 3 every cycle vertex is also tried as root and the multiset of areas must not change.
/// Throws ResourceLimit for L > 4.
BridgeLemmaReport verify_bridge_lemma(std::size_t L);

struct ToricCountRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t toric = 0;
  double bound = 0.0;
};

struct ToricCountReport {
  std::size_t torus_size = 0;
  std::vector<ToricCountRow> rows;  ///< every (m, n) with a nonzero toric count

  bool ok() const;
};

/// Number of valid toric configurations by (m, n) against
///   sum_{k <= m/L} sum_{c <= k} sum_{m_i >= L, sum m_i = m, sum n_i = n + c} prod L^2 D[m_i][n_i].
/// `plane` must cover m up to L^2.
ToricCountReport toric_count_bound(std::size_t L, const PolyominoCounts& plane);

}  // namespace rtnlab
