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

#ifndef NCOPT_SOLVER_HPP_
#define NCOPT_SOLVER_HPP_

#include <cstdint>
#include <vector>

#include "ncopt/design.hpp"

namespace ncopt {

struct SolverBudget {
  std::int64_t max_nodes = 10'000'000;
  double time_limit_seconds = 300.0;
  std::uint64_t seed = 0;
};

struct SolveReport {
  DesignSolution solution;
  // False when no feasible solution was found within the budget (only
  // possible for MIN_COST; the empty design is always feasible otherwise).
  bool has_solution = false;
  bool proved_optimal = false;
  std::int64_t nodes_explored = 0;
  double wall_time_seconds = 0.0;
  // MIN_COST: lower bound on the resource cost. MAX_THROUGHPUT: upper bound
  // on the served rate. Equals the objective when proved optimal.
  double best_bound = 0.0;
};

// Decisions taken so far, indexed like Instance::demands.
struct PartialAssignment {
  static constexpr int kUndecided = -2;
  static constexpr int kUnserved = -1;

  // Candidate index, kUndecided or kUnserved.
  std::vector<int> choice;
  // Index into Instance::coding_candidates, or -1. Both members of a coded
  // pair carry the same index.
  std::vector<int> coding;

  static PartialAssignment empty(const Instance& instance);
};

// Depth-first branch and bound, exact over the candidate pool. Throws
// InfeasibleError when a MIN_COST instance has no feasible design.
SolveReport solve_exact(const Instance& instance,
                        const SolverBudget& budget = {});

// Sequential cheapest-feasible routing, then coding pairs chosen by maximum
// weight matching. Never claims optimality.
SolveReport solve_greedy(const Instance& instance, std::uint64_t seed = 0);

// Resource-cost lower bound over all completions of `partial` that serve
// every undecided servable demand. Each coding saving is split evenly
// between its two members and every demand takes its best remaining share,
// so the bound never overestimates, only rises as decisions are added, and
// is exact on a complete assignment. Capacity is ignored.
double lower_bound(const Instance& instance, const PartialAssignment& partial);

}  // namespace ncopt

#endif  // NCOPT_SOLVER_HPP_
