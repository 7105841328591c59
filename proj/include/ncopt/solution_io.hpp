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

// Solution and failure-trace files.
//
// A solution file embeds its instance (topology and demand records in the
// net-model formats) followed by:
//   solution <mode> <cost|throughput>
//   candidates <k>
//   optimal <0|1>
//   assign <demand> work <links> prot <links> wch <start> <width> pch <start>
//   <width> group <demand_a> <demand_b> <coding_node> <branch_a> <branch_b>
//   <segment> encrypt <confidential> <carrier> <encoding_node> metric <name>
//   <value>
// <links> is a comma-separated link id list or '-' for none; a missing
// channel is written "- -". An encrypted flow's route is the confidential
// demand's working path.

#ifndef NCOPT_SOLUTION_IO_HPP_
#define NCOPT_SOLUTION_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ncopt/design.hpp"
#include "ncopt/verify.hpp"

namespace ncopt {

struct SolutionDocument {
  Topology topology;
  std::vector<Demand> demands;
  ProblemMode mode = ProblemMode::kRouting;
  Objective objective = Objective::kMinCost;
  int k = 4;
  DesignSolution solution;
};

std::string render_solution(const Instance& instance,
                            const DesignSolution& solution);
// Throws ParseError with the offending line.
SolutionDocument load_solution(std::string_view text);
SolutionDocument load_solution_file(const std::string& path);

// Comma-separated, one row per (scenario, served demand):
//   edge,u,v,demand,outcome,recovered,decode_surviving,decode_encoded
// Streams are hex (see BitStream::to_hex); absent ones are empty.
std::string render_trace(const Instance& instance,
                         const std::vector<RecoveryTrace>& traces);

}  // namespace ncopt

#endif  // NCOPT_SOLUTION_IO_HPP_
