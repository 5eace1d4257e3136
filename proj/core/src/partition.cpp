// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/partition.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "rtnlab/error.hpp"
#include "rtnlab/network.hpp"
#include "rtnlab/stats.hpp"
#include "rtnlab/variance.hpp"

namespace rtnlab {

SpinConfig::SpinConfig(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), spins_(rows * cols, Spin::down) {
  if (rows == 0 || cols == 0) throw InvalidArgument("empty spin configuration");
}

SpinConfig SpinConfig::from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
  if (rows * cols > 64) throw InvalidArgument("from_bits supports at most 64 sites");
  SpinConfig c(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) c.spins_[k] = ((bits >> k) & 1u) ? Spin::up : Spin::down;
  return c;
}

Spin SpinConfig::at(long x, long y) const {
  const long r = static_cast<long>(rows_);
  const long c = static_cast<long>(cols_);
  const auto xm = static_cast<std::size_t>(((x % r) + r) % r);
  const auto ym = static_cast<std::size_t>(((y % c) + c) % c);
  return spins_[xm * cols_ + ym];
}

void SpinConfig::set(std::size_t x, std::size_t y, Spin s) { spins_.at(x * cols_ + y) = s; }

std::size_t SpinConfig::count_up() const {
  return static_cast<std::size_t>(std::count(spins_.begin(), spins_.end(), Spin::up));
}

std::uint64_t SpinConfig::bits() const {
  if (spins_.size() > 64) throw InvalidArgument("bits() supports at most 64 sites");
  std::uint64_t b = 0;
  for (std::size_t k = 0; k < spins_.size(); ++k) {
    if (spins_[k] == Spin::up) b |= std::uint64_t{1} << k;
  }
  return b;
}

double config_amplitude(const SpinConfig& config, const WeightTable& table) {
  double a = 1.0;
  for (long x = 0; x < static_cast<long>(config.rows()); ++x) {
    for (long y = 0; y < static_cast<long>(config.cols()); ++y) {
      a *= table(config.at(x, y), config.at(x, y + 1), config.at(x + 1, y));
    }
  }
  return a;
}

ConfigClass classify_config(const SpinConfig& config) {
  bool any_up = false;
  for (long x = 0; x < static_cast<long>(config.rows()); ++x) {
    for (long y = 0; y < static_cast<long>(config.cols()); ++y) {
      if (config.at(x, y) != Spin::up) continue;
      any_up = true;
      if (config.at(x, y + 1) == Spin::down && config.at(x + 1, y) == Spin::down) return ConfigClass::zero;
    }
  }
  return any_up ? ConfigClass::valid : ConfigClass::ground;
}

namespace {

// Histogram of site-type counts: 8 types, 5 bits each (at most 25 sites).
using TypeHistogram = std::unordered_map<std::uint64_t, std::uint64_t>;

struct Geometry {
  std::size_t rows, cols;
  std::vector<std::array<std::size_t, 2>> succ;      // right, down
  std::vector<std::array<std::size_t, 3>> affected;  // self and the two predecessors
};

Geometry make_geometry(std::size_t rows, std::size_t cols) {
  Geometry g{rows, cols, {}, {}};
  const std::size_t V = rows * cols;
  g.succ.resize(V);
  g.affected.resize(V);
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t y = 0; y < cols; ++y) {
      const std::size_t k = x * cols + y;
      g.succ[k] = {x * cols + (y + 1) % cols, ((x + 1) % rows) * cols + y};
      g.affected[k] = {k, x * cols + (y + cols - 1) % cols, ((x + rows - 1) % rows) * cols + y};
    }
  }
  return g;
}

inline unsigned site_type(const Geometry& g, std::uint64_t bits, std::size_t k) {
  return static_cast<unsigned>(((bits >> k) & 1u) << 2 | ((bits >> g.succ[k][0]) & 1u) << 1 |
                               ((bits >> g.succ[k][1]) & 1u));
}

void histogram_range(const Geometry& g, std::uint64_t begin, std::uint64_t end, TypeHistogram& hist) {
  const std::size_t V = g.rows * g.cols;
  std::uint64_t gray = begin ^ (begin >> 1);
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < V; ++k) key += std::uint64_t{1} << (5 * site_type(g, gray, k));
  for (std::uint64_t i = begin;;) {
    ++hist[key];
    if (++i == end) break;
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t s : g.affected[flip]) key -= std::uint64_t{1} << (5 * site_type(g, gray, s));
    gray ^= std::uint64_t{1} << flip;
    for (std::size_t s : g.affected[flip]) key += std::uint64_t{1} << (5 * site_type(g, gray, s));
  }
}

}  // namespace

PartitionResult exact_partition_function(std::size_t rows, std::size_t cols, const WeightTable& table,
                                         std::size_t workers) {
  if (rows < 2 || cols < 2) throw InvalidArgument("partition function needs rows, cols >= 2");
  const std::size_t V = rows * cols;
  if (V > 25 || (std::uint64_t{1} << V) > kPartitionConfigCap) {
    throw ResourceLimit("2^" + std::to_string(V) + " configurations exceed the enumeration cap 2^25");
  }
  const std::uint64_t total = std::uint64_t{1} << V;
  const Geometry geo = make_geometry(rows, cols);
  if (workers == 0) workers = default_workers();
  workers = std::max<std::size_t>(1, std::min<std::size_t>(workers, total / 1024 + 1));

  std::vector<TypeHistogram> parts(workers);
  {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t b = total * w / workers;
      const std::uint64_t e = total * (w + 1) / workers;
      if (b == e) continue;
      if (workers == 1) {
        histogram_range(geo, b, e, parts[w]);
      } else {
        pool.emplace_back([&, b, e, w] { histogram_range(geo, b, e, parts[w]); });
      }
    }
    for (auto& t : pool) t.join();
  }
  TypeHistogram hist;
  for (const auto& p : parts) {
    for (const auto& [k, c] : p) hist[k] += c;
  }
  // Fixed summation order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(hist.begin(), hist.end());
  std::sort(entries.begin(), entries.end());

  const IsingCouplings couplings = IsingCouplings::for_kind(table.kind, table.bond_dim, table.phys_dim);
  std::array<Complex, 8> two_layer{};
  for (unsigned t = 0; t < 8; ++t) {
    two_layer[t] = summed_site_weight(couplings, static_cast<Spin>((t >> 2) & 1u),
                                      static_cast<Spin>((t >> 1) & 1u), static_cast<Spin>(t & 1u));
  }
  const std::uint64_t ground_key = V;  // every site of type 0

  PartitionResult r;
  r.rows = rows;
  r.cols = cols;
  r.table = table;
  r.configs = total;
  long double excited = 0.0L;
  long double ground = 0.0L;
  Complex complex_sum{};
  for (const auto& [key, count] : entries) {
    long double amp = 1.0L;
    Complex camp(1.0, 0.0);
    for (unsigned t = 0; t < 8; ++t) {
      const auto n = static_cast<int>((key >> (5 * t)) & 31u);
      if (n == 0) continue;
      amp *= std::pow(static_cast<long double>(table.entries[t]), n);
      camp *= std::pow(two_layer[t], n);
    }
    complex_sum += static_cast<double>(count) * camp;
    if (amp != 0.0L) r.nonzero_configs += count;
    if (key == ground_key) {
      ground += amp * count;
    } else {
      excited += amp * count;
    }
  }
  r.z_minus_one = static_cast<double>(excited + ground - 1.0L);
  r.z = static_cast<double>(excited + ground);
  r.two_layer_imag = complex_sum.imag();
  if (std::abs(complex_sum.imag()) > 1e-10) {
    throw ConsistencyError("two-layer partition function has imaginary part " +
                           std::to_string(complex_sum.imag()));
  }
  if (std::abs(complex_sum.real() - r.z) > 1e-10 * std::max(1.0, r.z)) {
    throw ConsistencyError("two-layer partition function disagrees with the weight table");
  }
  return r;
}

MomentEstimate mc_second_moment(const LatticeSpec& spec, std::size_t n_samples, std::uint64_t seed,
                                std::size_t workers) {
  spec.validate();
  if (n_samples < 2) throw InvalidArgument("need at least 2 samples");
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, n_samples);
  std::vector<double> norms(n_samples);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n_samples; i = next++) {
      Rng rng = make_rng(seed, i);
      norms[i] = norm_squared(build_state(spec, rng));
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<double> squares(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) squares[i] = norms[i] * norms[i];
  const SampleSummary a = summarize(norms);
  const SampleSummary b = summarize(squares);
  MomentEstimate m;
  m.n = n_samples;
  m.mean_norm = a.mean;
  m.mean_norm_se = a.mean_std_error;
  m.second_moment = b.mean;
  m.second_moment_se = b.mean_std_error;
  m.norms = std::move(norms);
  return m;
}

}  // namespace rtnlab
