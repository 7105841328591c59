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

#include "ncopt/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncopt/errors.hpp"
#include "ncopt/solution_io.hpp"
#include "ncopt/verify.hpp"

namespace ncopt {
namespace {

// Distinct from the payload seed so the key never equals a payload.
constexpr std::uint64_t kKeySampleSalt = 0x6b6579u;
constexpr std::size_t kKeySampleBits = 100000;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw Error("cannot write '" + path + "'");
}

std::string percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

std::string seconds(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::int64_t objective_of(const Instance& instance, const Metrics& m) {
  return instance.objective == Objective::kMaxThroughput
             ? m.served_rate
             : resource_cost(instance.layer(), m);
}

SolveReport run_solver(const Instance& instance,
                       const ExperimentConfig& config) {
  if (config.solver == SolverKind::kGreedy) {
    return solve_greedy(instance, config.budget.seed);
  }
  return solve_exact(instance, config.budget);
}

// Runs `body`, mapping library errors onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvariantError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InconsistencyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const SecurityViolationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string aligned(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> width;
  for (const auto& row : table) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace

ExperimentConfig canonical_config(ProblemMode mode) {
  ExperimentConfig c;
  c.mode = mode;
  const bool elastic = layer_of(mode) == Layer::kElastic;
  c.objective = elastic ? Objective::kMaxThroughput : Objective::kMinCost;
  c.rate_max = elastic ? 4 : 1;
  c.k = 4;
  c.capacity = 8;
  for (std::uint64_t s = 1; s <= 20; ++s) c.seeds.push_back(s);
  c.demand_counts = {5, 10, 15};
  return c;
}

Topology load_config_topology(const ExperimentConfig& config) {
  const Technology tech = layer_of(config.mode) == Layer::kElastic
                              ? Technology::kEon
                              : Technology::kWdm;
  if (config.topology == "cost239") {
    return builtin_cost239(config.capacity.value_or(8), tech);
  }
  Topology topo = load_topology_file(config.topology);
  if (config.capacity) topo = topo.with_capacity(*config.capacity);
  return topo.with_technology(tech);
}

std::vector<Demand> config_demands(const ExperimentConfig& config,
                                   const Topology& topology, int count,
                                   std::uint64_t seed) {
  if (!config.demands_file.empty()) {
    return load_demands_file(config.demands_file, &topology);
  }
  if (count <= 0) return {};
  const int rate_max =
      layer_of(config.mode) == Layer::kElastic ? config.rate_max : 1;
  return generate_demands(topology, count, seed, rate_max);
}

double ComparisonReport::saving(const ComparisonRow& row) const {
  if (!row.ok() || row.baseline == 0) return 0.0;
  const double b = static_cast<double>(row.baseline);
  const double c = static_cast<double>(row.coded);
  return objective == Objective::kMaxThroughput ? 100.0 * (c - b) / b
                                                : 100.0 * (b - c) / b;
}

SavingStats ComparisonReport::aggregate(bool codable_only) const {
  SavingStats s;
  double sum = 0.0;
  for (const ComparisonRow& row : rows) {
    if (!row.ok() || (codable_only && row.coding_candidates == 0)) continue;
    const double v = saving(row);
    if (s.rows == 0) {
      s.min = s.max = v;
    } else {
      s.min = std::min(s.min, v);
      s.max = std::max(s.max, v);
    }
    sum += v;
    ++s.rows;
  }
  if (s.rows > 0) s.mean = sum / s.rows;
  return s;
}

std::string ComparisonReport::to_csv() const {
  std::ostringstream out;
  out << "coded_mode,baseline_mode,objective,k\n"
      << to_string(coded_mode) << ',' << to_string(baseline_mode) << ','
      << to_string(objective) << ',' << k << "\n\n";
  out << "seed,demands,coded,baseline,saving_pct,coded_optimal,"
         "baseline_optimal,fair,coded_vars,baseline_vars,coding_candidates,"
         "error";
  if (timings) out << ",coded_seconds,baseline_seconds";
  out << '\n';
  for (const ComparisonRow& r : rows) {
    out << r.seed << ',' << r.num_demands << ',' << r.coded << ',' << r.baseline
        << ',' << percent(saving(r)) << ',' << (r.coded_optimal ? 1 : 0) << ','
        << (r.baseline_optimal ? 1 : 0) << ',' << (r.fair() ? 1 : 0) << ','
        << r.coded_variables << ',' << r.baseline_variables << ','
        << r.coding_candidates << ',' << csv_safe(r.error);
    if (timings) {
      out << ',' << seconds(r.coded_seconds) << ','
          << seconds(r.baseline_seconds);
    }
    out << '\n';
  }
  out << "\nscope,rows,mean_saving_pct,min_saving_pct,max_saving_pct\n";
  for (bool codable : {false, true}) {
    const SavingStats s = aggregate(codable);
    out << (codable ? "codable" : "all") << ',' << s.rows << ','
        << percent(s.mean) << ',' << percent(s.min) << ',' << percent(s.max)
        << '\n';
  }
  return out.str();
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  out << to_string(coded_mode) << " vs " << to_string(baseline_mode)
      << ", objective " << to_string(objective) << ", k=" << k
      << " (optimal over candidates)\n\n";
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> head = {"seed",    "|D|", "coded",     "baseline",
                                   "saving%", "opt", "vars(c/b)", "codable"};
  if (timings) head.push_back("seconds(c/b)");
  head.push_back("note");
  table.push_back(head);
  for (const ComparisonRow& r : rows) {
    std::vector<std::string> row = {std::to_string(r.seed),
                                    std::to_string(r.num_demands),
                                    r.ok() ? std::to_string(r.coded) : "-",
                                    r.ok() ? std::to_string(r.baseline) : "-",
                                    r.ok() ? percent(saving(r)) : "-",
                                    std::string(r.coded_optimal ? "y" : "n") +
                                        (r.baseline_optimal ? "y" : "n"),
                                    std::to_string(r.coded_variables) + "/" +
                                        std::to_string(r.baseline_variables),
                                    std::to_string(r.coding_candidates)};
    if (timings) {
      row.push_back(seconds(r.coded_seconds) + "/" +
                    seconds(r.baseline_seconds));
    }
    row.push_back(!r.ok() ? r.error : (r.fair() ? "" : "unproved"));
    table.push_back(std::move(row));
  }
  out << aligned(table) << '\n';
  std::vector<std::vector<std::string>> summary = {
      {"scope", "rows", "mean%", "min%", "max%"}};
  for (bool codable : {false, true}) {
    const SavingStats s = aggregate(codable);
    summary.push_back({codable ? "codable" : "all", std::to_string(s.rows),
                       percent(s.mean), percent(s.min), percent(s.max)});
  }
  out << aligned(summary);
  return out.str();
}

ComparisonReport run_comparison(const ExperimentConfig& config) {
  ComparisonReport report;
  report.coded_mode = config.coded_mode();
  report.baseline_mode = config.baseline_mode();
  report.objective = config.objective;
  report.k = config.k;
  report.timings = config.timings;

  const Topology topo = load_config_topology(config);
  std::vector<std::uint64_t> seeds = config.seeds;
  std::vector<int> counts = config.demand_counts;
  if (seeds.empty() || !config.demands_file.empty()) seeds = {config.seed};
  if (counts.empty() || !config.demands_file.empty()) {
    counts = {config.gen_count};
  }
  for (int count : counts) {
    for (std::uint64_t seed : seeds) {
      ComparisonRow row;
      row.seed = seed;
      try {
        const std::vector<Demand> demands =
            config_demands(config, topo, count, seed);
        row.num_demands = static_cast<int>(demands.size());
        const Instance coded = build_instance(topo, demands, report.coded_mode,
                                              config.objective, config.k);
        const Instance base = build_instance(
            topo, demands, report.baseline_mode, config.objective, config.k);
        row.coded_variables = variable_count(coded);
        row.baseline_variables = variable_count(base);
        row.coding_candidates =
            static_cast<int>(coded.coding_candidates.size());
        const SolveReport rc = run_solver(coded, config);
        const SolveReport rb = run_solver(base, config);
        row.coded_seconds = rc.wall_time_seconds;
        row.baseline_seconds = rb.wall_time_seconds;
        if (!rc.has_solution || !rb.has_solution) {
          row.error = "budget exhausted without a feasible design";
        } else {
          row.coded = objective_of(coded, rc.solution.metrics);
          row.baseline = objective_of(base, rb.solution.metrics);
          row.coded_optimal = rc.proved_optimal;
          row.baseline_optimal = rb.proved_optimal;
        }
      } catch (const Error& e) {
        row.error = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

int cmd_solve(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Topology topo = load_config_topology(config);
    const std::vector<Demand> demands =
        config_demands(config, topo, config.gen_count, config.seed);
    const Instance instance =
        build_instance(topo, demands, config.mode, config.objective, config.k);
    const SolveReport report = run_solver(instance, config);
    if (!report.has_solution) {
      err << "budget exhausted after " << report.nodes_explored
          << " nodes without a feasible design\n";
      return kExitBudget;
    }
    const std::string text = render_solution(instance, report.solution);
    if (config.out.empty()) {
      out << text;
    } else {
      write_file(config.out, text);
    }
    const Metrics& m = report.solution.metrics;
    out << "mode " << to_string(config.mode) << ", objective "
        << to_string(config.objective) << ", k=" << config.k << '\n'
        << "status "
        << (report.proved_optimal ? "optimal over candidates" : "feasible")
        << '\n'
        << "routing_cost " << m.routing_cost << '\n'
        << "wavelength_cost " << m.wavelength_cost << '\n'
        << "spectrum_cost " << m.spectrum_cost << '\n'
        << "served_rate " << m.served_rate << '\n'
        << "served_demands " << m.served_demands << '/'
        << instance.num_demands() << '\n'
        << "transponders " << m.transponder_count << '\n'
        << "coded_pairs " << report.solution.coding_groups.size() << '\n'
        << "nodes " << report.nodes_explored << '\n';
    return kExitOk;
  });
}

int cmd_compare(const ExperimentConfig& config, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const ComparisonReport report = run_comparison(config);
    if (!config.out.empty()) {
      write_file(config.out, report.to_csv());
      write_file(config.out + ".txt", report.to_text());
    }
    out << report.to_text();
    return kExitOk;
  });
}

int cmd_verify(const std::string& solution_path, std::uint64_t payload_seed,
               const std::string& trace_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const SolutionDocument doc = load_solution_file(solution_path);
    const Instance instance = build_instance(doc.topology, doc.demands,
                                             doc.mode, doc.objective, doc.k);
    const std::vector<Violation> violations =
        validate_solution(instance, doc.solution);
    if (!violations.empty()) {
      for (const Violation& v : violations) {
        err << "violation " << v.rule << ": " << v.detail << '\n';
      }
      return kExitVerification;
    }
    const auto payloads = random_payloads(instance, payload_seed);
    const std::vector<RecoveryTrace> traces =
        simulate_all_failures(instance, doc.solution, payloads);
    bool confidential = false;
    for (const Demand& d : instance.demands) confidential |= d.confidential;
    std::size_t flows = 0;
    if (confidential) {
      const BitStream key =
          BitStream::random(kKeySampleBits, payload_seed ^ kKeySampleSalt);
      flows =
          check_security(instance, doc.solution, payloads, key).flows.size();
    }
    std::size_t rows = 0;
    for (const RecoveryTrace& t : traces) rows += t.outcomes.size();
    if (!trace_path.empty())
      write_file(trace_path, render_trace(instance, traces));
    out << "verified: " << traces.size() << " fiber cuts, " << rows
        << " demand outcomes, every protected demand recovered";
    if (confidential) out << ", " << flows << " encrypted flows secure";
    out << '\n';
    return kExitOk;
  });
}

int cmd_stats(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Topology topo = load_config_topology(config);
    const std::vector<Demand> demands =
        config_demands(config, topo, config.gen_count, config.seed);
    std::vector<std::vector<std::string>> table = {
        {"mode", "candidates", "coding_candidates", "variables", "family"}};
    ModelStats stats;
    for (ProblemMode m : {config.coded_mode(), config.baseline_mode()}) {
      // Throughput objective so an unservable demand does not abort.
      const Instance instance =
          build_instance(topo, demands, m, Objective::kMaxThroughput, config.k);
      stats = instance.stats;
      std::size_t candidates = 0;
      for (const auto& c : instance.candidates) candidates += c.size();
      table.push_back({std::string(to_string(m)), std::to_string(candidates),
                       std::to_string(instance.coding_candidates.size()),
                       std::to_string(variable_count(instance)),
                       complexity_family(m)});
    }
    const char* unit = layer_of(config.mode) == Layer::kElastic ? "|S|" : "|W|";
    out << "topology " << topo.name() << ": |V|=" << stats.num_nodes
        << " |E|=" << stats.num_links << ' ' << unit << '='
        << stats.capacity_per_link << '\n'
        << "demands |D|=" << stats.num_demands << ", k=" << config.k << '\n'
        << aligned(table);
    return kExitOk;
  });
}

int cmd_topo(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Topology topo = load_config_topology(config);
    out << render_topology(topo);
    out << "# nodes " << topo.num_nodes() << ", links " << topo.num_links()
        << ", fibers " << topo.num_edges() << ", two-edge-connected "
        << (topo.is_two_edge_connected() ? "yes" : "no") << '\n';
    for (NodeId n : topo.nodes()) {
      out << "# degree " << n << ' ' << topo.degree(n) << '\n';
    }
    return kExitOk;
  });
}

}  // namespace ncopt
