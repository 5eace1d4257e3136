// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rtnlab/lattice.hpp"
#include "rtnlab/loss.hpp"

namespace rtnlab {

struct SiteVariance {
  std::size_t x = 0;
  std::size_t y = 0;
  double variance = 0.0;
  double variance_std_error = 0.0;
  double mean = 0.0;
  double mean_std_error = 0.0;
  std::size_t n = 0;
};

struct VarianceReport {
  LatticeSpec spec;
  LossSpec loss;
  std::vector<SiteVariance> sites;  ///< row-major
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::size_t failed = 0;  ///< samples dropped because evaluation threw
  double wall_seconds = 0.0;

  double mean_variance() const;
  double max_variance() const;
  std::size_t argmax_site() const;
};

/// Hardware concurrency, at least 1.
std::size_t default_workers();

/// Var over `n_samples` independent states of d L / d theta_k for every site k.
/// Sample i draws from make_rng(seed, i), so the report does not depend on `workers`.
/// `workers` = 0 picks default_workers().
VarianceReport variance_scan(const LatticeSpec& spec, const LossSpec& loss, std::size_t n_samples,
                             std::uint64_t seed, std::size_t workers = 0);

struct DistanceBin {
  std::size_t delta = 0;
  std::size_t site_count = 0;
  double mean_variance = 0.0;
  double std_error = 0.0;  ///< propagated from the per-site jackknife errors
};

/// Sites grouped by toric Manhattan distance to the observable site, ascending in delta.
/// Throws InvalidArgument for a global loss.
std::vector<DistanceBin> distance_profile(const VarianceReport& report);

/// Least-squares slope of log(mean variance) against delta.
double profile_log_slope(const std::vector<DistanceBin>& profile);

/// True when every bin is at most the previous one plus `slack_se` combined standard errors.
bool profile_nonincreasing(const std::vector<DistanceBin>& profile, double slack_se = 2.0);

struct OnsiteEntry {
  LatticeSpec spec;
  double variance = 0.0;
  double std_error = 0.0;
};

struct OnsiteFloorReport {
  std::vector<OnsiteEntry> entries;
  double ratio = 0.0;  ///< max / min on-site variance
  bool within_band = false;
  bool all_positive = false;  ///< every variance exceeds 3 standard errors
};

/// On-site variance (observable site = derivative site = 0) for each lattice.
/// `observable` and `kind` define the local loss; `band` is the allowed max/min ratio.
OnsiteFloorReport onsite_floor_check(const std::vector<LatticeSpec>& sizes, LossKind kind,
                                     const Matrix& observable, std::size_t n_samples,
                                     std::uint64_t seed, std::size_t workers = 0, double band = 3.0);

}  // namespace rtnlab
