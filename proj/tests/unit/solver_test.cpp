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

#include "ncopt/solver.hpp"

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ncopt/errors.hpp"
#include "ncopt/verify.hpp"
#include "oracle.hpp"

using namespace ncopt;

namespace {

constexpr ProblemMode kModes[] = {ProblemMode::kRouting, ProblemMode::kRnca,
                                  ProblemMode::kRwa,     ProblemMode::kRwnca,
                                  ProblemMode::kRsa,     ProblemMode::kRsnca};

// Large enough that the candidate pool holds every disjoint pair.
constexpr int kAllPairs = 1000;

Instance tiny_instance(std::uint64_t seed, ProblemMode mode,
                       Objective objective) {
  auto t = fixtures::random_tiny(seed, layer_of(mode));
  return build_instance(t.topology, t.demands, mode, objective, kAllPairs);
}

// Compares one solve against the oracle; returns false on disagreement.
void check_against_oracle(std::uint64_t seed, ProblemMode mode,
                          Objective objective) {
  auto t = fixtures::random_tiny(seed, layer_of(mode));
  CAPTURE(seed);
  CAPTURE(to_string(mode));
  CAPTURE(to_string(objective));
  std::optional<Instance> instance;
  try {
    instance =
        build_instance(t.topology, t.demands, mode, objective, kAllPairs);
  } catch (const InfeasibleError&) {
    REQUIRE(objective == Objective::kMinCost);
  }
  if (!instance) {
    for (const Demand& d : t.demands) {
      (void)d;
    }
    Instance raw;
    raw.topology = t.topology;
    raw.demands = t.demands;
    raw.mode = mode;
    raw.objective = objective;
    CHECK_FALSE(oracle::optimum(raw).feasible);
    return;
  }
  const oracle::Best want = oracle::optimum(*instance);
  try {
    const SolveReport got = solve_exact(*instance);
    REQUIRE(want.feasible);
    CHECK(got.proved_optimal);
    CHECK(validate_solution(*instance, got.solution).empty());
    const Metrics& m = got.solution.metrics;
    if (objective == Objective::kMaxThroughput) {
      CHECK(m.served_rate == want.served_rate);
    }
    CHECK(resource_cost(instance->layer(), m) == want.cost);
  } catch (const InfeasibleError&) {
    CHECK_FALSE(want.feasible);
  }
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("exact solver matches exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      for (ProblemMode mode : kModes) {
        check_against_oracle(seed, mode, Objective::kMinCost);
        check_against_oracle(seed, mode, Objective::kMaxThroughput);
      }
    }
  }

  TEST_CASE("butterfly optima") {
    const auto topo = fixtures::butterfly();
    const auto demands = fixtures::butterfly_demands();
    const auto coded = solve_exact(build_instance(
        topo, demands, ProblemMode::kRnca, Objective::kMinCost, 4));
    const auto plain = solve_exact(build_instance(
        topo, demands, ProblemMode::kRouting, Objective::kMinCost, 4));
    CHECK(coded.solution.metrics.routing_cost == 5);
    CHECK(plain.solution.metrics.routing_cost == 6);
    CHECK(coded.proved_optimal);
    CHECK(coded.best_bound == doctest::Approx(5));
    CHECK(coded.solution.coding_groups.size() == 1);
    CHECK(coded.solution.coding_groups[0].coding_node == 4);
  }

  TEST_CASE("lower bound is admissible and exact on complete assignments") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      for (ProblemMode mode : {ProblemMode::kRnca, ProblemMode::kRwnca,
                               ProblemMode::kRsnca, ProblemMode::kRouting}) {
        std::optional<Instance> inst;
        try {
          inst = build_instance(
              fixtures::random_tiny(seed, layer_of(mode)).topology,
              fixtures::random_tiny(seed, layer_of(mode)).demands, mode,
              Objective::kMinCost, 3);
        } catch (const InfeasibleError&) {
          continue;
        }
        const int n = inst->num_demands();
        CHECK(lower_bound(*inst, PartialAssignment::empty(*inst)) <=
              oracle::best_completion(*inst, PartialAssignment::empty(*inst)));
        for (int trial = 0; trial < 10; ++trial) {
          PartialAssignment p = PartialAssignment::empty(*inst);
          for (int d = 0; d < n; ++d) {
            if (rng() % 2) {
              p.choice[d] =
                  static_cast<int>(rng() % inst->candidates[d].size());
            }
          }
          // Fix a coding group now and then when its members are decided.
          for (int i = 0; i < static_cast<int>(inst->coding_candidates.size());
               ++i) {
            const auto& c = inst->coding_candidates[i];
            if (p.choice[c.demand_a] == c.candidate_a &&
                p.choice[c.demand_b] == c.candidate_b &&
                p.coding[c.demand_a] < 0 && p.coding[c.demand_b] < 0 &&
                rng() % 2) {
              p.coding[c.demand_a] = p.coding[c.demand_b] = i;
            }
          }
          const std::int64_t best = oracle::best_completion(*inst, p);
          const double bound = lower_bound(*inst, p);
          CAPTURE(seed);
          CHECK(bound <= best + 1e-9);
          bool complete = true;
          for (int d = 0; d < n; ++d) complete &= p.choice[d] >= 0;
          if (complete) CHECK(bound == doctest::Approx(best));
          ++checked;
        }
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("greedy never beats a proved optimum") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      for (ProblemMode mode : kModes) {
        Instance inst;
        try {
          inst = tiny_instance(seed, mode, Objective::kMinCost);
        } catch (const InfeasibleError&) {
          continue;
        }
        SolveReport exact;
        try {
          exact = solve_exact(inst);
        } catch (const InfeasibleError&) {
          continue;
        }
        try {
          const SolveReport greedy = solve_greedy(inst);
          CHECK_FALSE(greedy.proved_optimal);
          CHECK(validate_solution(inst, greedy.solution).empty());
          CHECK(resource_cost(inst.layer(), greedy.solution.metrics) >=
                resource_cost(inst.layer(), exact.solution.metrics));
        } catch (const InfeasibleError&) {
          // Greedy may miss a feasible design; the exact solver found one.
        }
      }
    }
  }

  TEST_CASE("cost239 greedy is feasible and no better than exact") {
    const Topology topo = builtin_cost239();
    const auto demands = generate_demands(topo, 8, 3, 1);
    const Instance inst = build_instance(topo, demands, ProblemMode::kRwnca,
                                         Objective::kMinCost, 4);
    const SolveReport greedy = solve_greedy(inst, 5);
    const SolveReport exact = solve_exact(inst);
    CHECK(exact.proved_optimal);
    CHECK(validate_solution(inst, greedy.solution).empty());
    CHECK(greedy.solution.metrics.wavelength_cost >=
          exact.solution.metrics.wavelength_cost);
  }

  TEST_CASE("node budget is deterministic") {
    const Topology topo = builtin_cost239();
    const auto demands = generate_demands(topo, 10, 11, 1);
    const Instance inst = build_instance(topo, demands, ProblemMode::kRnca,
                                         Objective::kMinCost, 4);
    SolverBudget budget;
    budget.max_nodes = 50;
    const SolveReport a = solve_exact(inst, budget);
    const SolveReport b = solve_exact(inst, budget);
    CHECK(a.nodes_explored <= 50);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.solution == b.solution);
    CHECK(a.best_bound <= resource_cost(inst.layer(), a.solution.metrics));
  }

  TEST_CASE("infeasible cost instance throws naming nothing feasible") {
    // Capacity 1 on a four-node instance: three disjoint pairs into node 3
    // would need more than the two fibers that reach it from 1 and 2.
    const Topology topo = fixtures::butterfly(1);
    std::vector<Demand> demands = {{1, 1, 3, 1, true, false},
                                   {2, 2, 3, 1, true, false},
                                   {3, 4, 3, 1, true, false}};
    const Instance inst = build_instance(topo, demands, ProblemMode::kRouting,
                                         Objective::kMinCost, 4);
    CHECK_THROWS_AS(solve_exact(inst), InfeasibleError);
  }

  TEST_CASE("throughput never loses to the baseline") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      for (ProblemMode mode :
           {ProblemMode::kRnca, ProblemMode::kRwnca, ProblemMode::kRsnca}) {
        const Instance coded =
            tiny_instance(seed, mode, Objective::kMaxThroughput);
        const Instance plain =
            tiny_instance(seed, baseline_of(mode), Objective::kMaxThroughput);
        CHECK(solve_exact(coded).solution.metrics.served_rate >=
              solve_exact(plain).solution.metrics.served_rate);
      }
    }
  }

}  // TEST_SUITE
