// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rtnlab/error.hpp"

namespace rtnlab {

SampleSummary summarize(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw InvalidArgument("summarize needs at least two samples");
  const double nd = static_cast<double>(n);

  // Shifted sums keep the leave-one-out variances accurate when the mean is large.
  const double shift = samples[0];
  double s1 = 0.0;
  double s2 = 0.0;
  for (double x : samples) {
    const double y = x - shift;
    s1 += y;
    s2 += y * y;
  }
  SampleSummary out;
  out.n = n;
  out.mean = shift + s1 / nd;
  out.variance = std::max(0.0, (s2 - s1 * s1 / nd) / (nd - 1.0));
  out.mean_std_error = std::sqrt(out.variance / nd);

  if (n >= 3) {
    std::vector<double> loo(n);
    double loo_mean = 0.0;
    const double m = nd - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double y = samples[i] - shift;
      const double t1 = s1 - y;
      const double t2 = s2 - y * y;
      loo[i] = (t2 - t1 * t1 / m) / (m - 1.0);
      loo_mean += loo[i];
    }
    loo_mean /= nd;
    double acc = 0.0;
    for (double v : loo) acc += (v - loo_mean) * (v - loo_mean);
    out.variance_std_error = std::sqrt((nd - 1.0) / nd * acc);
  }
  return out;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("fit_line needs matching samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_line needs two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

double ks_two_sample_pvalue(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("ks test needs nonempty samples");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double stat = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    stat = std::max(stat, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double en = std::sqrt(na * nb / (na + nb));
  const double lambda = (en + 0.12 + 0.11 / en) * stat;
  // Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-12 * std::abs(sum)) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace rtnlab
