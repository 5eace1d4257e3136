// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/report_io.hpp"

#include <ostream>

#include "rtnlab/error.hpp"

namespace rtnlab {

using nlohmann::json;

json to_json(const LatticeSpec& s) {
  return {{"rows", s.rows}, {"cols", s.cols}, {"bond_dim", s.bond_dim}, {"phys_dim", s.phys_dim}};
}

LatticeSpec lattice_from_json(const json& j) {
  try {
    LatticeSpec s;
    s.rows = j.at("rows").get<std::size_t>();
    s.cols = j.at("cols").get<std::size_t>();
    s.bond_dim = j.at("bond_dim").get<std::size_t>();
    s.phys_dim = j.at("phys_dim").get<std::size_t>();
    return s;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad lattice spec: ") + e.what());
  }
}

json to_json(const WeightTable& t) {
  json entries = json::object();
  for (unsigned i = 0; i < 8; ++i) {
    std::string key;
    for (unsigned b : {4u, 2u, 1u}) key += (i & b) ? 'u' : 'd';
    entries[key] = t.entries[i];
  }
  return {{"kind", to_string(t.kind)}, {"bond_dim", t.bond_dim}, {"phys_dim", t.phys_dim}, {"entries", entries}};
}

json to_json(const PartitionResult& r) {
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"bond_dim", r.table.bond_dim},
          {"phys_dim", r.table.phys_dim},
          {"kind", to_string(r.table.kind)},
          {"Z", r.z},
          {"Z_minus_1", r.z_minus_one},
          {"two_layer_imag", r.two_layer_imag},
          {"configs", r.configs},
          {"nonzero_configs", r.nonzero_configs}};
}

json to_json(const LossSpec& loss) {
  json j{{"kind", to_string(loss.kind)}, {"theory_mode", loss.theory_mode}};
  auto matrix = [](const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
      rows.push_back(row);
    }
    return rows;
  };
  if (is_global(loss.kind)) {
    json target = json::array();
    for (const auto& v : loss.target) {
      json vec = json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) vec.push_back({v(i).real(), v(i).imag()});
      target.push_back(vec);
    }
    j["target"] = target;
  } else {
    j["site"] = loss.site;
    j["observable"] = matrix(loss.observable);
  }
  return j;
}

json to_json(const VarianceReport& r) {
  json sites = json::array();
  for (const auto& s : r.sites) {
    sites.push_back({{"x", s.x},
                     {"y", s.y},
                     {"variance", s.variance},
                     {"std_error", s.variance_std_error},
                     {"mean", s.mean},
                     {"mean_std_error", s.mean_std_error},
                     {"n", s.n}});
  }
  return {{"spec", to_json(r.spec)},
          {"loss", to_json(r.loss)},
          {"seed", r.seed},
          {"requested", r.requested},
          {"failed", r.failed},
          {"mean_variance", r.mean_variance()},
          {"max_variance", r.max_variance()},
          {"argmax_site", r.argmax_site()},
          {"sites", sites},
          {"timing", {{"wall_seconds", r.wall_seconds}}}};
}

json to_json(const std::vector<DistanceBin>& profile) {
  json out = json::array();
  for (const auto& b : profile) {
    out.push_back({{"delta", b.delta},
                   {"sites", b.site_count},
                   {"mean_variance", b.mean_variance},
                   {"std_error", b.std_error}});
  }
  return out;
}

json to_json(const BoundReport& r) {
  return {{"name", r.name},       {"parameters", r.parameters}, {"bound", r.bound},
          {"compared", r.compared}, {"satisfied", r.satisfied},   {"slack", r.slack},
          {"note", r.note}};
}

json to_json(const PolyominoCounts& c) {
  json rows = json::array();
  for (std::size_t m = 1; m <= c.m_max(); ++m) {
    for (std::size_t n = 0; n <= c.n_max(); ++n) {
      if (c.at(m, n) != 0) rows.push_back({{"m", m}, {"n", n}, {"count", c.at(m, n)}});
    }
  }
  return {{"m_max", c.m_max()}, {"n_max", c.n_max()}, {"counts", rows}};
}

json to_json(const BridgeLemmaReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"bits", v.bits}, {"message", v.message}});
  return {{"L", r.torus_size},
          {"valid_configs", r.valid_configs},
          {"root_choices_checked", r.root_choices_checked},
          {"violations", violations},
          {"ok", r.ok()}};
}

json to_json(const ToricCountReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m}, {"n", row.n}, {"toric", row.toric}, {"bound", row.bound}});
  }
  return {{"L", r.torus_size}, {"rows", rows}, {"ok", r.ok()}};
}

void write_csv(std::ostream& out, const VarianceReport& r) {
  out << "site_x,site_y,variance,std_error,n,mean\n";
  out.precision(17);
  for (const auto& s : r.sites) {
    out << s.x << ',' << s.y << ',' << s.variance << ',' << s.variance_std_error << ',' << s.n << ',' << s.mean
        << '\n';
  }
}

void write_csv(std::ostream& out, const PolyominoCounts& c) {
  out << "m,n,count\n";
  for (std::size_t m = 1; m <= c.m_max(); ++m) {
    for (std::size_t n = 0; n <= c.n_max(); ++n) {
      if (c.at(m, n) != 0) out << m << ',' << n << ',' << c.at(m, n) << '\n';
    }
  }
}

}  // namespace rtnlab
