// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>

#include "rtnlab/state.hpp"

namespace rtnlab {

/// Binary state file:
///   "RTNS" | u32 version | u64 header length | JSON header | per site: u_minus, u_plus, generator
/// Matrices are row-major pairs of little-endian doubles (re, im). The header holds the
/// lattice spec, seed and per-site theta.
inline constexpr std::uint32_t kStateFormatVersion = 1;

void write_state(std::ostream& out, const TNState& state);
/// Throws InvalidArgument on a malformed or truncated stream.
TNState read_state(std::istream& in);

void save_state(const std::filesystem::path& path, const TNState& state);
TNState load_state(const std::filesystem::path& path);

}  // namespace rtnlab
