// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <cstdio>

#include "commands.hpp"
#include "rtnlab/error.hpp"
#include "rtnlab/lattice.hpp"
#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"
#include "rtnlab/variance.hpp"

using namespace rtnlab;
using namespace rtnlab::cli;

namespace {

struct RawOptions {
  std::string sizes;
  std::string format = "csv";
  std::string loss = "global_normalized";
  std::string torus = "2,3,4";
  std::size_t workers = 0;
};

void add_common(CLI::App* app, RunConfig& c, RawOptions& raw, const std::string& default_sizes,
                std::size_t default_samples) {
  raw.sizes = default_sizes;
  c.samples = default_samples;
  app->add_option("--sizes", raw.sizes, "lattice sizes, e.g. 2x2,2x3,3x3 (a bare L means LxL)")->capture_default_str();
  app->add_option("--bond-dim", c.bond_dim, "bond dimension D")->capture_default_str()->check(CLI::Range(2, 16));
  app->add_option("--phys-dim", c.phys_dim, "physical dimension d")->capture_default_str()->check(CLI::Range(2, 16));
  app->add_option("--samples", c.samples, "Monte Carlo samples per size")->capture_default_str();
  app->add_option("--seed", c.seed, "RNG seed")->required();
  app->add_option("--out", c.out_dir, "output directory")->capture_default_str();
  app->add_option("--format", raw.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--workers", raw.workers, "worker threads (0: available parallelism)")->capture_default_str();
}

// Size caps checked up front so a long run does not fail half way.
void validate(RunConfig& c, const RawOptions& raw) {
  c.sizes = parse_sizes(raw.sizes);
  c.format = raw.format == "json" ? OutputFormat::json : OutputFormat::csv;
  c.workers = raw.workers == 0 ? default_workers() : raw.workers;
  if (c.command == "norm-stats" || c.command == "var-scan") {
    if (c.samples < 2) throw InvalidArgument("--samples must be at least 2");
    for (const auto& s : c.sizes) LatticeSpec{s.first, s.second, c.bond_dim, c.phys_dim}.validate();
  }
  if (c.command == "norm-stats") {
    for (const auto& s : c.sizes) {
      if (s.first * s.second > 25) {
        throw ResourceLimit("exact partition function needs at most 25 sites; " + size_label(s) + " has " +
                            std::to_string(s.first * s.second));
      }
    }
  }
  if (c.command == "var-scan") {
    c.loss = parse_loss_kind(raw.loss);
    if (!is_global(c.loss)) {
      for (const auto& s : c.sizes) {
        if (c.observable_site >= s.first * s.second) {
          throw InvalidArgument("--observable-site " + std::to_string(c.observable_site) + " is outside " +
                                size_label(s));
        }
      }
    }
  }
  if (c.command == "polyomino") {
    if (c.max_area < 1 || c.max_area > kDirectedEnumerationCap) {
      throw ResourceLimit("--max-area must be in [1, " + std::to_string(kDirectedEnumerationCap) + "]");
    }
    c.torus_sizes.clear();
    for (const auto& s : parse_sizes(raw.torus)) {
      if (s.first != s.second) throw InvalidArgument("--torus takes square sizes");
      if (s.first > kToricEnumerationCap) {
        throw ResourceLimit("--torus sizes must be <= " + std::to_string(kToricEnumerationCap));
      }
      c.torus_sizes.push_back(s.first);
    }
  }
  if (c.command == "bounds") {
    for (const auto& s : c.sizes) {
      if (s.first != s.second) throw InvalidArgument("bounds takes square sizes only, got " + size_label(s));
      if (s.first > 5) throw ResourceLimit("bounds compares against exact enumeration; sizes must be <= 5");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtnlab: random tensor-network states, their norm statistics and gradient variances"};
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;

  auto* norm = app.add_subcommand("norm-stats", "Monte Carlo norm moments against the exact partition function");
  add_common(norm, config, raw, "2x2,2x3,3x3", 5000);

  auto* var = app.add_subcommand("var-scan", "per-site gradient variances");
  add_common(var, config, raw, "2x2,2x3,3x3", 300);
  var->add_option("--loss", raw.loss, "global_pure, global_normalized, local_unnormalized or local_normalized")
      ->capture_default_str();
  var->add_option("--observable-site", config.observable_site, "site index of the local observable")
      ->capture_default_str();

  auto* poly = app.add_subcommand("polyomino", "directed polyomino counts and the torus bridge checks");
  add_common(poly, config, raw, "2", 0);
  poly->add_option("--max-area", config.max_area, "largest area to enumerate")->capture_default_str();
  poly->add_option("--torus", raw.torus, "torus sizes for the bridge checks")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds against exact and sampled values");
  add_common(bounds, config, raw, "2,3,4", 200);
  bounds->add_flag("--local", config.local_check, "also fit the local-loss distance profile on a 4x5 torus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    validate(config, raw);
    if (config.command == "norm-stats") return cmd_norm_stats(config);
    if (config.command == "var-scan") return cmd_var_scan(config);
    if (config.command == "polyomino") return cmd_polyomino(config);
    return cmd_bounds(config);
  } catch (const ResourceLimit& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kExitResourceCap;
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitInvalidConfig;
  } catch (const ShapeError& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitInvalidConfig;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitInvalidConfig;
  } catch (const ConsistencyError& e) {
    std::fprintf(stderr, "check failed: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
