// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "rtnlab/loss.hpp"

namespace rtnlab::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string command;
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::size_t bond_dim = 2;
  std::size_t phys_dim = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::csv;
  std::size_t workers = 1;
  // var-scan
  LossKind loss = LossKind::global_normalized;
  std::size_t observable_site = 0;
  // polyomino
  std::size_t max_area = 10;
  std::vector<std::size_t> torus_sizes;
  // bounds
  bool local_check = false;
};

/// "2x2,2x3,3x3" or "3" (square). Throws InvalidArgument.
std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text);
std::string size_label(std::pair<std::size_t, std::size_t> size);

nlohmann::json to_json(const RunConfig& config);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitResourceCap = 4;

}  // namespace rtnlab::cli
