// SPDX-License-Identifier: Apache-2.0
#include "run_config.hpp"

#include <sstream>

#include "rtnlab/error.hpp"

namespace rtnlab::cli {

namespace {

std::size_t parse_extent(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < 2) {
    throw InvalidArgument("bad lattice size '" + whole + "': extents must be integers >= 2");
  }
  return v;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto x = item.find('x');
    if (x == std::string::npos) {
      const std::size_t L = parse_extent(item, item);
      out.emplace_back(L, L);
    } else {
      out.emplace_back(parse_extent(item.substr(0, x), item), parse_extent(item.substr(x + 1), item));
    }
  }
  if (out.empty()) throw InvalidArgument("no lattice sizes given");
  return out;
}

std::string size_label(std::pair<std::size_t, std::size_t> size) {
  return std::to_string(size.first) + "x" + std::to_string(size.second);
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& s : c.sizes) sizes.push_back(size_label(s));
  nlohmann::json j{{"command", c.command},
                   {"sizes", sizes},
                   {"bond_dim", c.bond_dim},
                   {"phys_dim", c.phys_dim},
                   {"samples", c.samples},
                   {"seed", c.seed},
                   {"out", c.out_dir.string()},
                   {"format", c.format == OutputFormat::csv ? "csv" : "json"},
                   {"workers", c.workers}};
  if (c.command == "var-scan") {
    j["loss"] = to_string(c.loss);
    j["observable_site"] = c.observable_site;
  }
  if (c.command == "polyomino") {
    j["max_area"] = c.max_area;
    j["torus_sizes"] = c.torus_sizes;
  }
  if (c.command == "bounds") j["local_check"] = c.local_check;
  return j;
}

}  // namespace rtnlab::cli
