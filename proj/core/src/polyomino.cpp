// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/polyomino.hpp"

#include <algorithm>
#include <cmath>

#include "rtnlab/error.hpp"

namespace rtnlab {

Polyomino Polyomino::plane(std::vector<Cell> cells, std::optional<Cell> root) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Polyomino p;
  p.cells = std::move(cells);
  p.root = root;
  return p;
}

Polyomino Polyomino::toric(const SpinConfig& config) {
  if (config.rows() != config.cols()) throw InvalidArgument("toric polyominoes need a square torus");
  Polyomino p;
  p.frame = Frame::toric;
  p.torus_size = config.rows();
  for (std::size_t x = 0; x < config.rows(); ++x) {
    for (std::size_t y = 0; y < config.cols(); ++y) {
      if (config.at(static_cast<long>(x), static_cast<long>(y)) == Spin::up) {
        p.cells.push_back({static_cast<int>(x), static_cast<int>(y)});
      }
    }
  }
  return p;
}

bool Polyomino::contains(Cell c) const {
  if (frame == Frame::toric) {
    const int l = static_cast<int>(torus_size);
    c = {((c.x % l) + l) % l, ((c.y % l) + l) % l};
  }
  return std::binary_search(cells.begin(), cells.end(), c);
}

PolyominoStats stats(const Polyomino& poly) {
  if (poly.cells.empty()) throw InvalidArgument("empty polyomino");
  PolyominoStats s;
  s.m = poly.cells.size();
  for (const Cell& c : poly.cells) {
    for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      if (!poly.contains(nb)) ++s.p;
    }
    if (!poly.contains({c.x - 1, c.y})) ++s.n;
  }
  return s;
}

bool is_directed(const Polyomino& poly) {
  if (poly.cells.empty()) return false;
  const Cell root = poly.root.value_or(poly.cells.back());
  for (const Cell& c : poly.cells) {
    if (c == root) continue;
    if (!poly.contains({c.x + 1, c.y}) && !poly.contains({c.x, c.y + 1})) return false;
  }
  return true;
}

PolyominoCounts::PolyominoCounts(std::size_t m_max, std::size_t n_max)
    : m_max_(m_max), n_max_(n_max), counts_((m_max + 1) * (n_max + 1), 0) {}

std::uint64_t PolyominoCounts::at(std::size_t m, std::size_t n) const {
  if (m > m_max_ || n > n_max_) return 0;
  return counts_[m * (n_max_ + 1) + n];
}

std::uint64_t& PolyominoCounts::at(std::size_t m, std::size_t n) {
  if (m > m_max_ || n > n_max_) throw InvalidArgument("count index out of range");
  return counts_[m * (n_max_ + 1) + n];
}

std::uint64_t PolyominoCounts::total(std::size_t m) const {
  std::uint64_t t = 0;
  for (std::size_t n = 0; n <= n_max_; ++n) t += at(m, n);
  return t;
}

namespace {

class DirectedGrower {
 public:
  using Visitor = std::function<void(const std::vector<Cell>&, const PolyominoStats&)>;

  DirectedGrower(std::size_t m_max, const Visitor& visit)
      : m_max_(m_max), side_(static_cast<int>(m_max) + 2), visit_(visit),
        occupied_(static_cast<std::size_t>(side_ * side_), 0), seen_(occupied_.size(), 0) {}

  void run() {
    seen(root()) = 1;
    std::vector<Cell> untried{root()};
    grow(untried);
  }

 private:
  // Cells have x, y in [-(m_max-1), 0]; stored with an offset and a one-cell margin.
  static Cell root() { return {0, 0}; }
  std::size_t slot(Cell c) const {
    return static_cast<std::size_t>((c.x + side_ - 2) * side_ + (c.y + side_ - 2));
  }
  bool in_range(Cell c) const { return c.x > -(side_ - 1) && c.y > -(side_ - 1) && c.x <= 1 && c.y <= 1; }
  char& seen(Cell c) { return seen_[slot(c)]; }
  bool occupied(Cell c) const { return in_range(c) && occupied_[slot(c)]; }

  void grow(std::vector<Cell> untried) {
    while (!untried.empty()) {
      const Cell c = untried.back();
      untried.pop_back();
      add(c);
      visit_(cells_, stats_);
      if (cells_.size() < m_max_) {
        std::vector<Cell> next = untried;
        std::vector<Cell> fresh;
        for (Cell nb : {Cell{c.x - 1, c.y}, Cell{c.x, c.y - 1}}) {
          if (!seen(nb)) {
            seen(nb) = 1;
            fresh.push_back(nb);
            next.push_back(nb);
          }
        }
        grow(std::move(next));
        for (Cell nb : fresh) seen(nb) = 0;
      }
      remove(c);
    }
  }

  void add(Cell c) {
    int nbrs = 0;
    for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      nbrs += occupied(nb) ? 1 : 0;
    }
    stats_.m += 1;
    stats_.p = stats_.p + 4 - 2 * static_cast<std::size_t>(nbrs);
    stats_.n += occupied({c.x - 1, c.y}) ? 0 : 1;
    stats_.n -= occupied({c.x + 1, c.y}) ? 1 : 0;
    occupied_[slot(c)] = 1;
    cells_.push_back(c);
  }

  void remove(Cell c) {
    cells_.pop_back();
    occupied_[slot(c)] = 0;
    int nbrs = 0;
    for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      nbrs += occupied(nb) ? 1 : 0;
    }
    stats_.m -= 1;
    stats_.p = stats_.p + 2 * static_cast<std::size_t>(nbrs) - 4;
    stats_.n -= occupied({c.x - 1, c.y}) ? 0 : 1;
    stats_.n += occupied({c.x + 1, c.y}) ? 1 : 0;
  }

  std::size_t m_max_;
  int side_;
  const Visitor& visit_;
  std::vector<char> occupied_;
  std::vector<char> seen_;
  std::vector<Cell> cells_;
  PolyominoStats stats_;
};

}  // namespace

void for_each_directed(std::size_t m_max,
                       const std::function<void(const std::vector<Cell>&, const PolyominoStats&)>& visit) {
  if (m_max > kDirectedEnumerationCap) {
    throw ResourceLimit("directed enumeration is capped at area " + std::to_string(kDirectedEnumerationCap));
  }
  if (m_max == 0) return;
  DirectedGrower(m_max, visit).run();
}

PolyominoCounts enumerate_directed(std::size_t m_max) {
  PolyominoCounts counts(m_max, m_max);
  for_each_directed(m_max, [&](const std::vector<Cell>&, const PolyominoStats& s) { ++counts.at(s.m, s.n); });
  return counts;
}

double gen_fun_singularity(double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("p must be a finite nonnegative number");
  return 2.0 / ((2.0 + p) + std::sqrt(p * p + 8.0 * p));
}

double gen_fun_G(double q, double p) {
  const double qc = gen_fun_singularity(p);
  if (!(q >= 0.0) || !(q < qc)) {
    throw DomainError("G(q, p) diverges: need 0 <= q < " + std::to_string(qc) + " at p = " + std::to_string(p));
  }
  const double den = 1.0 - q * (2.0 + p) + q * q * (1.0 - p);
  const double num = (1.0 + q) * (1.0 + q - q * p);
  if (!(den > 0.0) || !(num / den > 0.0)) throw DomainError("G(q, p): nonpositive radicand");
  return 0.5 * p * (std::sqrt(num / den) - 1.0);
}

std::string render_ascii(const Polyomino& poly) {
  if (poly.cells.empty()) return "";
  int x0 = poly.cells.front().x, x1 = x0, y0 = poly.cells.front().y, y1 = y0;
  if (poly.frame == Frame::toric) {
    x0 = y0 = 0;
    x1 = y1 = static_cast<int>(poly.torus_size) - 1;
  } else {
    for (const Cell& c : poly.cells) {
      x0 = std::min(x0, c.x);
      x1 = std::max(x1, c.x);
      y0 = std::min(y0, c.y);
      y1 = std::max(y1, c.y);
    }
  }
  std::string out;
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y <= y1; ++y) out += poly.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Polyomino example_hexomino() {
  return Polyomino::plane({{-3, -2}, {-2, -2}, {-2, -1}, {-1, -1}, {-1, 0}, {0, 0}}, Cell{0, 0});
}

std::vector<SpinConfig> enumerate_toric(std::size_t L) {
  if (L < 2) throw InvalidArgument("torus side must be >= 2");
  if (L > kToricEnumerationCap) throw ResourceLimit("toric enumeration is capped at L = 4");
  std::vector<SpinConfig> out;
  const std::uint64_t total = std::uint64_t{1} << (L * L);
  for (std::uint64_t b = 0; b < total; ++b) {
    SpinConfig c = SpinConfig::from_bits(L, L, b);
    if (classify_config(c) == ConfigClass::valid) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rtnlab
