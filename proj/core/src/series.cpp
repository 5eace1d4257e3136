// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "rtnlab/error.hpp"

namespace rtnlab {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Poly = std::vector<cpp_rational>;  // coefficients in p, ascending

Poly poly(std::initializer_list<int> c) {
  Poly out;
  for (int v : c) out.emplace_back(v);
  return out;
}

void add_scaled(Poly& acc, const Poly& x, const cpp_rational& scale = 1) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += scale * x[i];
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

PolyominoCounts series_coefficients(std::size_t m_max, std::size_t n_max) {
  if (m_max > kSeriesCap) throw ResourceLimit("series expansion is capped at m = " + std::to_string(kSeriesCap));
  const std::size_t order = m_max + 1;

  // numerator 1 + (2-p) q + (1-p) q^2, denominator 1 - (2+p) q + (1-p) q^2
  const std::vector<Poly> num{poly({1}), poly({2, -1}), poly({1, -1})};
  const Poly den1 = poly({2, 1});
  const Poly den2 = poly({1, -1});

  // 1/den: e_m = (2+p) e_{m-1} - (1-p) e_{m-2}
  std::vector<Poly> inv(order);
  inv[0] = poly({1});
  for (std::size_t m = 1; m < order; ++m) {
    inv[m] = multiply(den1, inv[m - 1]);
    if (m >= 2) add_scaled(inv[m], multiply(den2, inv[m - 2]), -1);
  }
  std::vector<Poly> ratio(order);
  for (std::size_t m = 0; m < order; ++m) {
    for (std::size_t i = 0; i < num.size() && i <= m; ++i) add_scaled(ratio[m], multiply(num[i], inv[m - i]));
  }
  // sqrt: s_0 = 1, 2 s_m = r_m - sum_{i=1}^{m-1} s_i s_{m-i}
  std::vector<Poly> root(order);
  root[0] = poly({1});
  for (std::size_t m = 1; m < order; ++m) {
    Poly acc = ratio[m];
    for (std::size_t i = 1; i < m; ++i) add_scaled(acc, multiply(root[i], root[m - i]), -1);
    for (auto& c : acc) c /= 2;
    root[m] = std::move(acc);
  }

  // G = p/2 (s - 1): [q^m p^n] G = [p^(n-1)] s_m / 2
  PolyominoCounts counts(m_max, n_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t k = 0; k < root[m].size(); ++k) {
      const cpp_rational c = root[m][k] / 2;
      if (c == 0) continue;
      if (boost::multiprecision::denominator(c) != 1 || c < 0) {
        throw ConsistencyError("series coefficient (" + std::to_string(m) + ", " + std::to_string(k + 1) +
                               ") is not a nonnegative integer: " + c.str());
      }
      if (k + 1 > n_max) continue;
      const cpp_int value = boost::multiprecision::numerator(c);
      counts.at(m, k + 1) = value.convert_to<std::uint64_t>();
    }
  }
  return counts;
}

}  // namespace rtnlab
