// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rtnlab/lattice.hpp"
#include "rtnlab/weights.hpp"

namespace rtnlab {

/// Upper-layer spins on a periodic rows x cols grid, row-major.
class SpinConfig {
 public:
  SpinConfig(std::size_t rows, std::size_t cols);
  /// Bit k of `bits` is site k (1 = up). Needs rows * cols <= 64.
  static SpinConfig from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return spins_.size(); }
  /// Coordinates taken mod the lattice size.
  Spin at(long x, long y) const;
  void set(std::size_t x, std::size_t y, Spin s);
  std::size_t count_up() const;
  std::uint64_t bits() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Spin> spins_;
};

/// Product over sites of table(s(x,y), s(x,y+1), s(x+1,y)).
double config_amplitude(const SpinConfig& config, const WeightTable& table);

enum class ConfigClass { ground, valid, zero };

/// ground: all down; zero: some up site has both successors down; valid otherwise.
ConfigClass classify_config(const SpinConfig& config);

struct PartitionResult {
  std::size_t rows = 0;
  std::size_t cols = 0;
  WeightTable table;
  double z = 0.0;
  double z_minus_one = 0.0;  ///< sum without the all-down configuration
  double two_layer_imag = 0.0;  ///< imaginary part of the complex two-layer evaluation
  std::uint64_t configs = 0;
  std::uint64_t nonzero_configs = 0;
};

inline constexpr std::uint64_t kPartitionConfigCap = std::uint64_t{1} << 25;

/// Sum of config_amplitude over all 2^(rows cols) configurations, Gray-code order.
/// Also evaluates the complex two-layer Ising form and throws ConsistencyError when its
/// imaginary part exceeds 1e-10 or its real part disagrees with the table sum.
/// Throws ResourceLimit above kPartitionConfigCap configurations.
PartitionResult exact_partition_function(std::size_t rows, std::size_t cols, const WeightTable& table,
                                         std::size_t workers = 0);

struct MomentEstimate {
  std::size_t n = 0;
  double mean_norm = 0.0;  ///< E<Psi|Psi>
  double mean_norm_se = 0.0;
  double second_moment = 0.0;  ///< E<Psi|Psi>^2
  double second_moment_se = 0.0;
  std::vector<double> norms;
};

/// Monte-Carlo moments of <Psi|Psi> over independent states; sample i uses make_rng(seed, i).
MomentEstimate mc_second_moment(const LatticeSpec& spec, std::size_t n_samples, std::uint64_t seed,
                                std::size_t workers = 0);

}  // namespace rtnlab
