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

#include "ncopt/verify.hpp"

#include <algorithm>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "ncopt/errors.hpp"
#include "ncopt/solver.hpp"

using namespace ncopt;

namespace {

struct Solved {
  Instance instance;
  DesignSolution solution;
};

Solved solve(const Topology& t, const std::vector<Demand>& d, ProblemMode m,
             Objective o = Objective::kMinCost) {
  Instance inst = build_instance(t, d, m, o, 4);
  DesignSolution s = solve_exact(inst).solution;
  return {std::move(inst), std::move(s)};
}

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.rule == rule; });
}

const DemandOutcome& outcome(const RecoveryTrace& t, int id) {
  for (const DemandOutcome& o : t.outcomes) {
    if (o.demand_id == id) return o;
  }
  FAIL("demand missing from trace");
  return t.outcomes.front();
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("butterfly coded design under every cut") {
    const Solved s =
        solve(fixtures::butterfly(), fixtures::butterfly_demands(), ProblemMode::kRnca);
    REQUIRE(validate_solution(s.instance, s.solution).empty());
    const auto payloads = random_payloads(s.instance, 9);
    const auto traces = simulate_all_failures(s.instance, s.solution, payloads);
    REQUIRE(traces.size() == 5);
    for (const RecoveryTrace& t : traces) {
      const Edge& e = s.instance.topology.edges()[t.failed_edge];
      for (const DemandOutcome& o : t.outcomes) {
        CHECK(o.recovered == payloads.at(o.demand_id));
      }
      if (e.u == 1 && e.v == 3) {
        const DemandOutcome& a = outcome(t, 1);
        CHECK(a.outcome == Outcome::kRecoveredByDecode);
        REQUIRE(a.decode_surviving);
        CHECK(*a.decode_surviving == payloads.at(2));
        CHECK(decode_lost(*a.decode_surviving, *a.decode_encoded) ==
              payloads.at(1));
        CHECK(outcome(t, 2).outcome == Outcome::kDeliveredDirect);
      } else if (e.u == 2 && e.v == 3) {
        CHECK(outcome(t, 2).outcome == Outcome::kRecoveredByDecode);
      } else {
        CHECK(outcome(t, 1).outcome == Outcome::kDeliveredDirect);
        CHECK(outcome(t, 2).outcome == Outcome::kDeliveredDirect);
      }
    }
  }

  TEST_CASE("butterfly uncoded design falls back to protection") {
    const Solved s = solve(fixtures::butterfly(), fixtures::butterfly_demands(),
                           ProblemMode::kRouting);
    const auto payloads = random_payloads(s.instance, 2);
    const EdgeId ac = *s.instance.topology.find_edge(1, 3);
    const RecoveryTrace t =
        simulate_failure(s.instance, s.solution, ac, payloads);
    CHECK(outcome(t, 1).outcome == Outcome::kRecoveredByProtection);
    CHECK(outcome(t, 1).recovered == payloads.at(1));
  }

  TEST_CASE("outcome names round trip") {
    for (Outcome o :
         {Outcome::kDeliveredDirect, Outcome::kRecoveredByProtection,
          Outcome::kRecoveredByDecode, Outcome::kLost}) {
      CHECK(parse_outcome(to_string(o)) == o);
    }
    CHECK_FALSE(parse_outcome("maybe"));
  }

  TEST_CASE("unsound coding is caught by simulation") {
    // B's working path moved onto the relay while the coded group still
    // routes B's protection there: one cut on X->C kills B's work and the
    // encoded signal together.
    Solved s =
        solve(fixtures::butterfly(), fixtures::butterfly_demands(), ProblemMode::kRnca);
    const Topology& topo = s.instance.topology;
    REQUIRE(s.solution.coding_groups.size() == 1);
    s.solution.assignments[1].route = {make_path(topo, {7, 9}),
                                       make_path(topo, {3})};
    CHECK(has_rule(validate_solution(s.instance, s.solution), "coding"));
    CHECK_THROWS_AS(simulate_all_failures(s.instance, s.solution,
                                          random_payloads(s.instance, 1)),
                    InconsistencyError);
  }

  TEST_CASE("mutations are flagged") {
    const Solved base =
        solve(fixtures::butterfly(2), fixtures::butterfly_demands(), ProblemMode::kRwnca);
    const Instance& inst = base.instance;
    REQUIRE(validate_solution(inst, base.solution).empty());
    const Topology& topo = inst.topology;

    SUBCASE("protection shares the working fiber") {
      DesignSolution s = base.solution;
      s.coding_groups.clear();
      s.assignments[0].route.protection = s.assignments[0].route.working;
      CHECK(has_rule(validate_solution(inst, s), "disjointness"));
    }
    SUBCASE("demand dropped") {
      DesignSolution s = base.solution;
      s.coding_groups.clear();
      s.assignments.pop_back();
      CHECK(has_rule(validate_solution(inst, s), "coverage"));
    }
    SUBCASE("wavelength swapped onto a busy one") {
      DesignSolution s = base.solution;
      s.coding_groups.clear();
      // Uncoded, both protections cross link 9 and must differ.
      s.assignments[0].protection_channel = Channel{0, 1};
      s.assignments[1].protection_channel = Channel{0, 1};
      s.metrics = compute_metrics(inst, s);
      CHECK(has_rule(validate_solution(inst, s), "overlap"));
    }
    SUBCASE("channel beyond capacity") {
      DesignSolution s = base.solution;
      s.assignments[0].working_channel = Channel{5, 1};
      s.metrics = compute_metrics(inst, s);
      CHECK(has_rule(validate_solution(inst, s), "capacity"));
    }
    SUBCASE("missing channel") {
      DesignSolution s = base.solution;
      s.assignments[1].working_channel.reset();
      CHECK(has_rule(validate_solution(inst, s), "continuity"));
    }
    SUBCASE("coded members on different channels") {
      DesignSolution s = base.solution;
      REQUIRE(s.coding_groups.size() == 1);
      s.assignments[1].protection_channel = Channel{1, 1};
      s.assignments[0].protection_channel = Channel{0, 1};
      CHECK(has_rule(validate_solution(inst, s), "coding"));
    }
    SUBCASE("metrics tampered") {
      DesignSolution s = base.solution;
      s.metrics.wavelength_cost += 1;
      CHECK(has_rule(validate_solution(inst, s), "metrics"));
    }
    SUBCASE("coding node moved") {
      DesignSolution s = base.solution;
      s.coding_groups[0].coding_node = 1;
      CHECK(has_rule(validate_solution(inst, s), "coding"));
    }
    SUBCASE("wrong route endpoints") {
      DesignSolution s = base.solution;
      s.assignments[0].route.working = make_path(topo, {5});
      CHECK(has_rule(validate_solution(inst, s), "route"));
    }
  }

  TEST_CASE("opaque capacity") {
    const Topology topo = fixtures::butterfly(1);
    const Instance inst =
        build_instance(topo, fixtures::butterfly_demands(), ProblemMode::kRouting,
                       Objective::kMinCost, 4);
    DesignSolution s;
    s.assignments.push_back(
        {1, {make_path(topo, {1}), make_path(topo, {5, 9})}, {}, {}});
    s.assignments.push_back(
        {2, {make_path(topo, {3}), make_path(topo, {7, 9})}, {}, {}});
    s.metrics = compute_metrics(inst, s);
    CHECK(has_rule(validate_solution(inst, s), "capacity"));
  }

  TEST_CASE("keyed encrypted flow") {
    const Solved s =
        solve(fixtures::butterfly(), fixtures::keyed_demands(), ProblemMode::kRnca);
    REQUIRE(s.solution.encrypted_flows.size() == 1);
    const EncryptedFlow& f = s.solution.encrypted_flows[0];
    CHECK(f.confidential_demand == 2);
    CHECK(f.carrier_demand == 1);
    CHECK(f.encoding_node == 2);
    CHECK(validate_solution(s.instance, s.solution).empty());
    const auto payloads = random_payloads(s.instance, 4);
    const BitStream key = BitStream::random(100000, 77);
    const SecurityReport r =
        check_security(s.instance, s.solution, payloads, key);
    REQUIRE(r.flows.size() == 1);
    CHECK(r.flows[0].tapped_links >= 2);
    CHECK(r.flows[0].extra_channels == 0);
    CHECK(r.flows[0].ones_fraction >= 0.49);
    CHECK(r.flows[0].ones_fraction <= 0.51);
    for (const auto& t :
         simulate_all_failures(s.instance, s.solution, payloads)) {
      CHECK(outcome(t, 2).recovered == payloads.at(2));
    }
  }

  TEST_CASE("security negatives") {
    const Topology topo = fixtures::butterfly();
    std::vector<Demand> d = {{1, 1, 3, 1, true, false},
                             {2, 2, 3, 1, true, true}};
    Solved s = solve(topo, d, ProblemMode::kRnca);
    const auto payloads = random_payloads(s.instance, 5);

    SUBCASE("encoding after the first hop leaks plaintext") {
      DesignSolution bad = s.solution;
      Assignment& a = bad.assignments[1];
      a.route = {make_path(topo, {7, 9}), make_path(topo, {3})};
      bad.coding_groups.clear();
      bad.encrypted_flows[0].shared_route = a.route.working;
      bad.encrypted_flows[0].encoding_node = 4;
      bad.metrics = compute_metrics(s.instance, bad);
      try {
        check_security(s.instance, bad, payloads, BitStream::random(100000, 1));
        FAIL("expected an s1 violation");
      } catch (const SecurityViolationError& e) {
        CHECK(std::string(e.what()).find("s1") != std::string::npos);
        CHECK(std::string(e.what()).find("link 7") != std::string::npos);
      }
    }
    SUBCASE("constant key fails the balance check") {
      try {
        check_security(s.instance, s.solution, payloads, BitStream(100000));
        FAIL("expected an s3 violation");
      } catch (const SecurityViolationError& e) {
        CHECK(std::string(e.what()).find("s3") != std::string::npos);
      }
    }
    SUBCASE("short key sample") {
      CHECK_THROWS_AS(check_security(s.instance, s.solution, payloads,
                                     BitStream::random(1000, 1)),
                      SecurityViolationError);
    }
    SUBCASE("missing flow") {
      DesignSolution bad = s.solution;
      bad.encrypted_flows.clear();
      CHECK(has_rule(validate_solution(s.instance, bad), "encryption"));
      CHECK_THROWS_AS(check_security(s.instance, bad, payloads,
                                     BitStream::random(100000, 1)),
                      SecurityViolationError);
    }
  }

  TEST_CASE("cost239 trace covers every fiber for every demand") {
    const Topology topo = builtin_cost239();
    const auto demands = generate_demands(topo, 6, 4, 1);
    const Solved s = solve(topo, demands, ProblemMode::kRwnca);
    const auto traces = simulate_all_failures(s.instance, s.solution,
                                              random_payloads(s.instance, 1));
    std::size_t rows = 0;
    for (const auto& t : traces) rows += t.outcomes.size();
    CHECK(traces.size() == 26);
    CHECK(rows == 26 * 6);
  }

}  // TEST_SUITE
