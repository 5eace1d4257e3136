// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <vector>

#include "rtnlab/bounds.hpp"
#include "rtnlab/bridge.hpp"
#include "rtnlab/lattice.hpp"
#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"
#include "rtnlab/variance.hpp"
#include "rtnlab/weights.hpp"

namespace rtnlab {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const LatticeSpec& spec);
LatticeSpec lattice_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WeightTable& table);
nlohmann::json to_json(const PartitionResult& result);
nlohmann::json to_json(const LossSpec& loss);
/// Includes wall time under "timing".
nlohmann::json to_json(const VarianceReport& report);
nlohmann::json to_json(const std::vector<DistanceBin>& profile);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const PolyominoCounts& counts);
nlohmann::json to_json(const BridgeLemmaReport& report);
nlohmann::json to_json(const ToricCountReport& report);

/// site_x,site_y,variance,std_error,n,mean
void write_csv(std::ostream& out, const VarianceReport& report);
/// m,n,count (nonzero entries only)
void write_csv(std::ostream& out, const PolyominoCounts& counts);

}  // namespace rtnlab
