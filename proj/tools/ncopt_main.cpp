// Copyright 2026 The ncopt Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncopt/bench.hpp"
#include "ncopt/mode.hpp"

namespace {

struct Flags {
  std::string topology = "cost239";
  std::string demands;
  int gen = 10;
  std::uint64_t seed = 1;
  int rate_max = 1;
  std::string mode = "rnca";
  std::string objective = "cost";
  int k = 4;
  std::optional<int> capacity;
  std::string solver = "exact";
  std::int64_t budget_nodes = 10'000'000;
  double time_limit = 300.0;
  std::string out;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--topology", f.topology, "topology file or 'cost239'");
  cmd->add_option("--demands", f.demands, "demand file");
  cmd->add_option("--gen", f.gen, "number of generated demands")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", f.seed, "generator seed");
  cmd->add_option("--rate-max", f.rate_max, "largest generated rate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", f.mode, "routing|rnca|rwa|rwnca|rsa|rsnca");
  cmd->add_option("--objective", f.objective, "cost|throughput");
  cmd->add_option("--k", f.k, "candidate paths per demand")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--capacity", f.capacity, "override every link capacity")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--solver", f.solver, "exact|greedy");
  cmd->add_option("--budget-nodes", f.budget_nodes, "search node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", f.time_limit, "seconds per solve")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "output path");
}

// Returns false after printing a message when a flag value is unknown.
bool to_config(const Flags& f, ncopt::ExperimentConfig& c) {
  const auto mode = ncopt::parse_mode(f.mode);
  if (!mode) {
    std::cerr << "unknown mode '" << f.mode << "'\n";
    return false;
  }
  const auto objective = ncopt::parse_objective(f.objective);
  if (!objective) {
    std::cerr << "unknown objective '" << f.objective << "'\n";
    return false;
  }
  if (f.solver != "exact" && f.solver != "greedy") {
    std::cerr << "unknown solver '" << f.solver << "'\n";
    return false;
  }
  c.topology = f.topology;
  c.demands_file = f.demands;
  c.gen_count = f.gen;
  c.seed = f.seed;
  c.rate_max = f.rate_max;
  c.mode = *mode;
  c.objective = *objective;
  c.k = f.k;
  c.capacity = f.capacity;
  c.solver = f.solver == "exact" ? ncopt::SolverKind::kExact
                                 : ncopt::SolverKind::kGreedy;
  c.budget.max_nodes = f.budget_nodes;
  c.budget.time_limit_seconds = f.time_limit;
  c.budget.seed = f.seed;
  c.out = f.out;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network-coded protection design for optical networks"};
  app.require_subcommand(1);

  Flags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "design one instance");
  add_common(solve, solve_flags);

  Flags compare_flags;
  std::vector<std::uint64_t> seeds;
  std::vector<int> counts;
  bool timings = false;
  bool canonical = false;
  CLI::App* compare =
      app.add_subcommand("compare", "coded mode against its baseline");
  add_common(compare, compare_flags);
  compare->add_option("--seeds", seeds, "seeds to sweep")->delimiter(',');
  compare->add_option("--demand-counts", counts, "demand counts to sweep")
      ->delimiter(',');
  compare->add_flag("--timings", timings, "include wall times");
  compare->add_flag("--canonical", canonical,
                    "the canonical cost239 sweep for --mode's pairing");

  std::string solution_path;
  std::uint64_t payload_seed = 1;
  std::string trace_path;
  CLI::App* verify =
      app.add_subcommand("verify", "audit a solution under every fiber cut");
  verify->add_option("solution", solution_path, "solution file")->required();
  verify->add_option("--payload-seed", payload_seed, "payload seed");
  verify->add_option("--out", trace_path, "trace CSV path");

  Flags stats_flags;
  CLI::App* stats =
      app.add_subcommand("stats", "model sizes for a mode pairing");
  add_common(stats, stats_flags);

  Flags topo_flags;
  CLI::App* topo = app.add_subcommand("topo", "print a topology");
  add_common(topo, topo_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ncopt::kExitParse;
  }

  ncopt::ExperimentConfig config;
  if (*verify) {
    return ncopt::cmd_verify(solution_path, payload_seed, trace_path, std::cout,
                             std::cerr);
  }
  if (*compare) {
    if (!to_config(compare_flags, config)) return ncopt::kExitParse;
    if (canonical) {
      ncopt::ExperimentConfig base = ncopt::canonical_config(config.mode);
      base.out = config.out;
      base.timings = timings;
      return ncopt::cmd_compare(base, std::cout, std::cerr);
    }
    config.seeds = seeds;
    config.demand_counts = counts;
    config.timings = timings;
    return ncopt::cmd_compare(config, std::cout, std::cerr);
  }
  const Flags& f = *solve ? solve_flags : *stats ? stats_flags : topo_flags;
  if (!to_config(f, config)) return ncopt::kExitParse;
  if (*solve) return ncopt::cmd_solve(config, std::cout, std::cerr);
  if (*stats) return ncopt::cmd_stats(config, std::cout, std::cerr);
  return ncopt::cmd_topo(config, std::cout, std::cerr);
}
