// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "run_config.hpp"

namespace rtnlab::cli {

// Each returns an exit code; exceptions from the library propagate to main.
int cmd_norm_stats(const RunConfig& config);
int cmd_var_scan(const RunConfig& config);
int cmd_polyomino(const RunConfig& config);
int cmd_bounds(const RunConfig& config);

}  // namespace rtnlab::cli
