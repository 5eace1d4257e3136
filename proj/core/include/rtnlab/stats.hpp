// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

namespace rtnlab {

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double mean_std_error = 0.0;
  double variance = 0.0;            ///< unbiased, n-1 denominator
  double variance_std_error = 0.0;  ///< delete-one jackknife
};

/// Requires at least two samples.
SampleSummary summarize(std::span<const double> samples);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Requires two distinct x values.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Two-sample Kolmogorov-Smirnov test; returns the asymptotic p-value.
double ks_two_sample_pvalue(std::span<const double> a, std::span<const double> b);

}  // namespace rtnlab
