// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rtnlab/partition.hpp"

namespace rtnlab {

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Frame { plane, toric };

/// Cell set, kept sorted. Toric polyominoes live on an L x L torus with coordinates in [0, L).
struct Polyomino {
  std::vector<Cell> cells;
  Frame frame = Frame::plane;
  std::size_t torus_size = 0;
  std::optional<Cell> root;

  static Polyomino plane(std::vector<Cell> cells, std::optional<Cell> root = std::nullopt);
  /// The up-sites of a square configuration.
  static Polyomino toric(const SpinConfig& config);

  bool contains(Cell c) const;
};

struct PolyominoStats {
  std::size_t m = 0;  ///< area
  std::size_t p = 0;  ///< unequal horizontal plus vertical neighbour pairs
  std::size_t n = 0;  ///< upper perimeter: cells whose (x-1, y) is empty

  friend bool operator==(const PolyominoStats&, const PolyominoStats&) = default;
};

/// Throws InvalidArgument for an empty cell set. Toric neighbours wrap mod L.
PolyominoStats stats(const Polyomino& poly);

/// Every non-root cell has (x+1, y) or (x, y+1) in the set; the root defaults to the
/// lexicographically largest cell.
bool is_directed(const Polyomino& poly);

/// Counts D[m][n] for 1 <= m <= m_max and 0 <= n <= n_max.
class PolyominoCounts {
 public:
  PolyominoCounts(std::size_t m_max, std::size_t n_max);

  std::size_t m_max() const { return m_max_; }
  std::size_t n_max() const { return n_max_; }
  std::uint64_t at(std::size_t m, std::size_t n) const;
  std::uint64_t& at(std::size_t m, std::size_t n);
  /// sum over n
  std::uint64_t total(std::size_t m) const;

  friend bool operator==(const PolyominoCounts&, const PolyominoCounts&) = default;

 private:
  std::size_t m_max_;
  std::size_t n_max_;
  std::vector<std::uint64_t> counts_;
};

inline constexpr std::size_t kDirectedEnumerationCap = 12;

/// Calls `visit` once for every directed polyomino of area <= m_max rooted at (0, 0),
/// i.e. cells with x, y <= 0. Redelmeier-style growth through the predecessors
/// (x-1, y) and (x, y-1). Throws ResourceLimit above kDirectedEnumerationCap.
void for_each_directed(std::size_t m_max,
                       const std::function<void(const std::vector<Cell>&, const PolyominoStats&)>& visit);

PolyominoCounts enumerate_directed(std::size_t m_max);

/// Smallest positive zero of 1 - q(2+p) + q^2(1-p).
double gen_fun_singularity(double p);

/// p/2 (sqrt((1+q)(1+q-qp) / (1-q(2+p)+q^2(1-p))) - 1).
/// Throws DomainError unless p >= 0 and 0 <= q < gen_fun_singularity(p).
double gen_fun_G(double q, double p);

/// Rows x (top to bottom), columns y, '#' for a cell.
std::string render_ascii(const Polyomino& poly);

/// A directed hexomino with m = 6, p = 14, n = 3.
Polyomino example_hexomino();

inline constexpr std::size_t kToricEnumerationCap = 4;

/// Every configuration classified valid on the L x L torus. Throws ResourceLimit for L > 4.
std::vector<SpinConfig> enumerate_toric(std::size_t L);

}  // namespace rtnlab
