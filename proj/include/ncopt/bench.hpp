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

// Experiment orchestration behind the command-line verbs.

#ifndef NCOPT_BENCH_HPP_
#define NCOPT_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ncopt/design.hpp"
#include "ncopt/solver.hpp"

namespace ncopt {

enum class SolverKind { kExact, kGreedy };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitVerification = 5;

struct ExperimentConfig {
  // "cost239" or a topology file path.
  std::string topology = "cost239";
  // Demand file; when empty, demands are generated.
  std::string demands_file;
  int gen_count = 10;
  std::uint64_t seed = 1;
  int rate_max = 1;
  // Either member of a pairing; `pair()` gives both.
  ProblemMode mode = ProblemMode::kRnca;
  Objective objective = Objective::kMinCost;
  int k = 4;
  // Overrides every link's capacity when set.
  std::optional<int> capacity;
  SolverKind solver = SolverKind::kExact;
  SolverBudget budget;
  std::string out;

  // Sweep axes for compare; empty means the single (seed, gen_count) row.
  std::vector<std::uint64_t> seeds;
  std::vector<int> demand_counts;
  // Wall times in reports; off by default so reports are byte-stable.
  bool timings = false;

  ProblemMode coded_mode() const { return coded_of(mode); }
  ProblemMode baseline_mode() const { return baseline_of(mode); }
};

// The canonical sweep: 20 seeds, |D| in {5, 10, 15}, k = 4, capacity 8 and
// rate_max 4 on the elastic pair, cost objective on the WDM pairs and
// throughput on the elastic pair.
ExperimentConfig canonical_config(ProblemMode mode);

Topology load_config_topology(const ExperimentConfig& config);
std::vector<Demand> config_demands(const ExperimentConfig& config,
                                   const Topology& topology, int count,
                                   std::uint64_t seed);

struct ComparisonRow {
  std::uint64_t seed = 0;
  int num_demands = 0;
  // Resource cost, or served rate for the throughput objective.
  std::int64_t coded = 0;
  std::int64_t baseline = 0;
  bool coded_optimal = false;
  bool baseline_optimal = false;
  std::int64_t coded_variables = 0;
  std::int64_t baseline_variables = 0;
  int coding_candidates = 0;
  double coded_seconds = 0.0;
  double baseline_seconds = 0.0;
  // Empty on success, otherwise why the row has no numbers.
  std::string error;

  bool ok() const { return error.empty(); }
  bool fair() const { return ok() && coded_optimal && baseline_optimal; }
};

struct SavingStats {
  int rows = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct ComparisonReport {
  ProblemMode coded_mode = ProblemMode::kRnca;
  ProblemMode baseline_mode = ProblemMode::kRouting;
  Objective objective = Objective::kMinCost;
  int k = 4;
  bool timings = false;
  std::vector<ComparisonRow> rows;

  // Percent: (baseline - coded) / baseline for costs, (coded - baseline) /
  // baseline for throughput; 0 when the baseline is 0.
  double saving(const ComparisonRow& row) const;
  // Over successful rows, and over successful rows with a codable pair.
  SavingStats aggregate(bool codable_only) const;

  std::string to_csv() const;
  std::string to_text() const;
};

ComparisonReport run_comparison(const ExperimentConfig& config);

// Verbs. Each returns an exit code and writes messages to `err`.
int cmd_solve(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_compare(const ExperimentConfig& config, std::ostream& out,
                std::ostream& err);
int cmd_verify(const std::string& solution_path, std::uint64_t payload_seed,
               const std::string& trace_path, std::ostream& out,
               std::ostream& err);
int cmd_stats(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_topo(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err);

}  // namespace ncopt

#endif  // NCOPT_BENCH_HPP_
