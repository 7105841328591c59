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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "ncopt/solution_io.hpp"
#include "ncopt/verify.hpp"

using namespace ncopt;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ncopt_bench_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

ExperimentConfig butterfly_config(ProblemMode mode) {
  ExperimentConfig c;
  c.topology = fixtures::data_path("butterfly.topo");
  c.demands_file = fixtures::data_path("butterfly.dem");
  c.mode = mode;
  return c;
}

}  // namespace

TEST_SUITE("bench-cli") {
  TEST_CASE("solve butterfly writes a verifiable solution") {
    ExperimentConfig c = butterfly_config(ProblemMode::kRnca);
    c.out = scratch("butterfly.sol").string();
    std::ostringstream out, err;
    REQUIRE(cmd_solve(c, out, err) == kExitOk);
    const SolutionDocument doc = load_solution_file(c.out);
    CHECK(doc.solution.metrics.routing_cost == 5);
    CHECK(doc.solution.proved_optimal);
    CHECK(doc.mode == ProblemMode::kRnca);
    std::ostringstream vout, verr;
    const auto trace = scratch("butterfly.trace");
    CHECK(cmd_verify(c.out, 3, trace.string(), vout, verr) == kExitOk);
    // Header plus 5 cuts times 2 demands.
    const std::string t = slurp(trace);
    CHECK(std::count(t.begin(), t.end(), '\n') == 11);
  }

  TEST_CASE("solution files round trip") {
    for (ProblemMode m : {ProblemMode::kRnca, ProblemMode::kRwnca,
                          ProblemMode::kRsnca, ProblemMode::kRouting}) {
      const Topology topo = layer_of(m) == Layer::kElastic
                                ? builtin_cost239(8, Technology::kEon)
                                : builtin_cost239();
      auto demands =
          generate_demands(topo, 8, 21, m == ProblemMode::kRsnca ? 3 : 1);
      demands[2].confidential = true;
      demands[3].is_protected = false;
      const Instance inst =
          build_instance(topo, demands, m, Objective::kMaxThroughput, 3);
      const DesignSolution s = solve_greedy(inst, 1).solution;
      const std::string text = render_solution(inst, s);
      const SolutionDocument doc = load_solution(text);
      CHECK(doc.topology == topo);
      CHECK(doc.demands == demands);
      CHECK(doc.k == 3);
      CHECK(doc.objective == Objective::kMaxThroughput);
      CHECK(doc.solution == s);
      CHECK(render_solution(inst, doc.solution) == text);
    }
  }

  TEST_CASE("malformed topology: parse exit, no output") {
    const auto topo = scratch("bad.topo");
    write(topo, "topology bad wdm\nnode 1\nnode two\n");
    ExperimentConfig c = butterfly_config(ProblemMode::kRnca);
    c.topology = topo.string();
    c.out = scratch("bad.sol").string();
    fs::remove(c.out);
    std::ostringstream out, err;
    CHECK(cmd_solve(c, out, err) == kExitParse);
    CHECK_FALSE(fs::exists(c.out));
    CHECK(err.str().find("line 3") != std::string::npos);
  }

  TEST_CASE("bridge-isolated demand: infeasible exit naming it") {
    const auto topo = scratch("bridge.topo");
    write(topo,
          "topology bridge wdm\nnode 1\nnode 2\nnode 3\nnode 4\n"
          "link 1 1 2 1 2\nlink 2 2 1 1 2\nlink 3 2 3 1 2\nlink 4 3 2 1 2\n"
          "link 5 3 1 1 2\nlink 6 1 3 1 2\nlink 7 3 4 1 2\nlink 8 4 3 1 2\n");
    const auto dem = scratch("bridge.dem");
    write(dem, "demand 1 1 2 1 1 0\ndemand 7 1 4 1 1 0\n");
    ExperimentConfig c;
    c.topology = topo.string();
    c.demands_file = dem.string();
    std::ostringstream out, err;
    CHECK(cmd_solve(c, out, err) == kExitInfeasible);
    CHECK(err.str().find("demand 7") != std::string::npos);
  }

  TEST_CASE("budget without incumbent") {
    ExperimentConfig c;
    c.gen_count = 12;
    c.seed = 3;
    c.mode = ProblemMode::kRwa;
    c.capacity = 1;
    c.budget.max_nodes = 1;
    std::ostringstream out, err;
    const int code = cmd_solve(c, out, err);
    // Either greedy already found a design or nothing was found in budget.
    CHECK((code == kExitOk || code == kExitBudget || code == kExitInfeasible));
  }

  TEST_CASE("compare butterfly") {
    ExperimentConfig c = butterfly_config(ProblemMode::kRnca);
    const ComparisonReport r = run_comparison(c);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].coded == 5);
    CHECK(r.rows[0].baseline == 6);
    CHECK(r.rows[0].fair());
    CHECK(r.saving(r.rows[0]) == doctest::Approx(100.0 / 6));
    CHECK(r.to_csv().find("16.667") != std::string::npos);
  }

  TEST_CASE("no codable pair gives exactly zero") {
    const auto dem = scratch("split.dem");
    write(dem, "demand 1 1 3 1 1 0\ndemand 2 2 4 1 1 0\n");
    ExperimentConfig c = butterfly_config(ProblemMode::kRwnca);
    c.demands_file = dem.string();
    const ComparisonReport r = run_comparison(c);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].coding_candidates == 0);
    CHECK(r.saving(r.rows[0]) == 0.0);
    CHECK(r.aggregate(true).rows == 0);
  }

  TEST_CASE("transparent sweep dominance") {
    ExperimentConfig c;
    c.mode = ProblemMode::kRwnca;
    c.capacity = 8;
    c.demand_counts = {10};
    for (std::uint64_t s = 1; s <= 20; ++s) c.seeds.push_back(s);
    const ComparisonReport r = run_comparison(c);
    REQUIRE(r.rows.size() == 20);
    for (const ComparisonRow& row : r.rows) {
      REQUIRE(row.fair());
      CHECK(r.saving(row) >= 0.0);
    }
    CHECK(r.aggregate(false).mean > 0.0);
  }

  TEST_CASE("reports are byte-stable") {
    ExperimentConfig c;
    c.mode = ProblemMode::kRsnca;
    c.objective = Objective::kMaxThroughput;
    c.rate_max = 3;
    c.capacity = 4;
    c.seeds = {1, 2, 3};
    c.demand_counts = {6};
    c.out = scratch("rep1.csv").string();
    std::ostringstream o1, e1, o2, e2;
    REQUIRE(cmd_compare(c, o1, e1) == kExitOk);
    const std::string first = slurp(c.out);
    const std::string first_text = slurp(c.out + ".txt");
    REQUIRE(cmd_compare(c, o2, e2) == kExitOk);
    CHECK(slurp(c.out) == first);
    CHECK(slurp(c.out + ".txt") == first_text);
    CHECK(first.find("seed,") != std::string::npos);
  }

  TEST_CASE("stats") {
    ExperimentConfig c;
    c.gen_count = 0;
    std::ostringstream out, err;
    REQUIRE(cmd_stats(c, out, err) == kExitOk);
    CHECK(out.str().find("|D|=0") != std::string::npos);
    const Topology t = builtin_cost239();
    auto d = generate_demands(t, 5, 2, 1);
    auto twice = d;
    for (Demand x : d) {
      x.id += 100;
      twice.push_back(x);
    }
    for (ProblemMode m :
         {ProblemMode::kRnca, ProblemMode::kRouting, ProblemMode::kRsnca}) {
      const auto one =
          variable_count(build_instance(t, d, m, Objective::kMaxThroughput, 2));
      const auto two = variable_count(
          build_instance(t, twice, m, Objective::kMaxThroughput, 2));
      CHECK(two == 2 * one);
    }
    ExperimentConfig ten;
    ten.gen_count = 10;
    std::ostringstream o2, e2;
    REQUIRE(cmd_stats(ten, o2, e2) == kExitOk);
    CHECK(o2.str().find("O(|D||V||E|)") != std::string::npos);
    CHECK(o2.str().find("O(|D||E|)") != std::string::npos);
  }

  TEST_CASE("tampered solution fails verification") {
    ExperimentConfig c = butterfly_config(ProblemMode::kRwnca);
    c.out = scratch("tamper.sol").string();
    std::ostringstream out, err;
    REQUIRE(cmd_solve(c, out, err) == kExitOk);
    std::string text = slurp(c.out);
    // Move demand 1's working lightpath to a wavelength the fiber lacks.
    const auto pos = text.find("assign 1 ");
    REQUIRE(pos != std::string::npos);
    const auto wch = text.find("wch ", pos);
    text.replace(wch, 7, "wch 9 1");
    write(c.out, text);
    std::ostringstream vout, verr;
    CHECK(cmd_verify(c.out, 1, "", vout, verr) == kExitVerification);
    CHECK(verr.str().find("violation") != std::string::npos);
  }

  TEST_CASE("topo prints the builtin") {
    ExperimentConfig c;
    std::ostringstream out, err;
    REQUIRE(cmd_topo(c, out, err) == kExitOk);
    CHECK(load_topology(out.str()) == builtin_cost239());
    CHECK(out.str().find("two-edge-connected yes") != std::string::npos);
  }

}  // TEST_SUITE
