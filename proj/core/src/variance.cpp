// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/variance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "rtnlab/error.hpp"
#include "rtnlab/stats.hpp"

namespace rtnlab {

double VarianceReport::mean_variance() const {
  if (sites.empty()) return 0.0;
  double s = 0.0;
  for (const auto& v : sites) s += v.variance;
  return s / static_cast<double>(sites.size());
}

double VarianceReport::max_variance() const {
  return sites.empty() ? 0.0 : sites[argmax_site()].variance;
}

std::size_t VarianceReport::argmax_site() const {
  std::size_t best = 0;
  for (std::size_t k = 1; k < sites.size(); ++k) {
    if (sites[k].variance > sites[best].variance) best = k;
  }
  return best;
}

std::size_t default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

VarianceReport variance_scan(const LatticeSpec& spec, const LossSpec& loss, std::size_t n_samples,
                             std::uint64_t seed, std::size_t workers) {
  spec.validate();
  loss.validate(spec);
  if (n_samples < 2) throw InvalidArgument("variance_scan needs at least 2 samples");
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, n_samples);

  const auto start = std::chrono::steady_clock::now();
  const std::size_t V = spec.sites();
  std::vector<double> grads(n_samples * V, 0.0);
  std::vector<char> ok(n_samples, 0);
  std::atomic<std::size_t> next{0};

  auto work = [&]() {
    for (std::size_t i = next++; i < n_samples; i = next++) {
      try {
        Rng rng = make_rng(seed, i);
        const TNState state = build_state(spec, rng);
        const LossEvaluation e = loss_and_gradients(state, loss);
        std::copy(e.gradient.begin(), e.gradient.end(), grads.begin() + static_cast<std::ptrdiff_t>(i * V));
        ok[i] = 1;
      } catch (const DegenerateState&) {
        ok[i] = 0;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  VarianceReport r;
  r.spec = spec;
  r.loss = loss;
  r.seed = seed;
  r.requested = n_samples;
  std::vector<std::size_t> good;
  for (std::size_t i = 0; i < n_samples; ++i) {
    if (ok[i]) good.push_back(i);
  }
  r.failed = n_samples - good.size();
  if (good.size() < 2) throw DegenerateState("fewer than 2 samples evaluated successfully");

  std::vector<double> column(good.size());
  for (std::size_t k = 0; k < V; ++k) {
    for (std::size_t j = 0; j < good.size(); ++j) column[j] = grads[good[j] * V + k];
    const SampleSummary s = summarize(column);
    const SiteCoord c = spec.coord(k);
    r.sites.push_back({c.x, c.y, s.variance, s.variance_std_error, s.mean, s.mean_std_error, s.n});
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<DistanceBin> distance_profile(const VarianceReport& report) {
  if (is_global(report.loss.kind)) throw InvalidArgument("distance profile needs a local loss");
  std::map<std::size_t, std::vector<const SiteVariance*>> groups;
  for (std::size_t k = 0; k < report.sites.size(); ++k) {
    groups[toric_distance(report.spec, k, report.loss.site)].push_back(&report.sites[k]);
  }
  std::vector<DistanceBin> out;
  for (const auto& [delta, members] : groups) {
    DistanceBin b;
    b.delta = delta;
    b.site_count = members.size();
    double se2 = 0.0;
    for (const auto* m : members) {
      b.mean_variance += m->variance;
      se2 += m->variance_std_error * m->variance_std_error;
    }
    const double n = static_cast<double>(members.size());
    b.mean_variance /= n;
    b.std_error = std::sqrt(se2) / n;
    out.push_back(b);
  }
  return out;
}

double profile_log_slope(const std::vector<DistanceBin>& profile) {
  std::vector<double> x, y;
  for (const auto& b : profile) {
    if (b.mean_variance <= 0.0) continue;
    x.push_back(static_cast<double>(b.delta));
    y.push_back(std::log(b.mean_variance));
  }
  return fit_line(x, y).slope;
}

bool profile_nonincreasing(const std::vector<DistanceBin>& profile, double slack_se) {
  for (std::size_t i = 1; i < profile.size(); ++i) {
    const double slack = slack_se * std::hypot(profile[i].std_error, profile[i - 1].std_error);
    if (profile[i].mean_variance > profile[i - 1].mean_variance + slack) return false;
  }
  return true;
}

OnsiteFloorReport onsite_floor_check(const std::vector<LatticeSpec>& sizes, LossKind kind,
                                     const Matrix& observable, std::size_t n_samples,
                                     std::uint64_t seed, std::size_t workers, double band) {
  if (sizes.empty()) throw InvalidArgument("no lattice sizes given");
  OnsiteFloorReport r;
  const LossSpec loss = LossSpec::local(kind, observable, 0);
  for (const auto& spec : sizes) {
    // Only site 0 is needed; the scan evaluates every gradient at negligible extra cost.
    const VarianceReport vr = variance_scan(spec, loss, n_samples, seed, workers);
    r.entries.push_back({spec, vr.sites[0].variance, vr.sites[0].variance_std_error});
  }
  double lo = r.entries.front().variance;
  double hi = lo;
  r.all_positive = true;
  for (const auto& e : r.entries) {
    lo = std::min(lo, e.variance);
    hi = std::max(hi, e.variance);
    if (!(e.variance > 3.0 * e.std_error)) r.all_positive = false;
  }
  r.ratio = lo > 0.0 ? hi / lo : (hi > 0.0 ? INFINITY : 1.0);
  r.within_band = r.ratio <= band;
  return r;
}

}  // namespace rtnlab
