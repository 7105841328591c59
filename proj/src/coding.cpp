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

#include "ncopt/coding.hpp"

namespace ncopt {

std::optional<CodingGroup> codable(const Topology& topology, int demand_a,
                                   const PathPair& pair_a, int demand_b,
                                   const PathPair& pair_b) {
  if (!pair_a.has_protection() || !pair_b.has_protection()) {
    return std::nullopt;
  }
  const Path& wa = pair_a.working;
  const Path& wb = pair_b.working;
  const Path& pa = pair_a.protection;
  const Path& pb = pair_b.protection;

  // c1
  if (wa.dst() != wb.dst() || pa.dst() != wa.dst() || pb.dst() != wb.dst()) {
    return std::nullopt;
  }
  // c2
  int shared = 0;
  while (shared < pa.hops() && shared < pb.hops() &&
         pa.links[pa.hops() - 1 - shared] == pb.links[pb.hops() - 1 - shared]) {
    ++shared;
  }
  if (shared == 0) return std::nullopt;

  const int split_a = pa.hops() - shared;
  const int split_b = pb.hops() - shared;
  CodingGroup group;
  group.demand_a = demand_a;
  group.demand_b = demand_b;
  group.coding_node = pa.nodes[split_a];
  group.encoded_segment = subpath(topology, pa, split_a, pa.hops());
  group.branch_a = subpath(topology, pa, 0, split_a);
  group.branch_b = subpath(topology, pb, 0, split_b);

  // c3
  if (!edge_disjoint(topology, wa, wb)) return std::nullopt;
  // c4
  if (!edge_disjoint(topology, group.encoded_segment, wa) ||
      !edge_disjoint(topology, group.encoded_segment, wb)) {
    return std::nullopt;
  }
  // c5
  if (!edge_disjoint(topology, pa, wa) || !edge_disjoint(topology, pb, wb)) {
    return std::nullopt;
  }
  // c6
  if (!edge_disjoint(topology, group.branch_a, wb) ||
      !edge_disjoint(topology, group.branch_b, wa)) {
    return std::nullopt;
  }
  return group;
}

std::optional<CodingGroup> codable(const Topology& topology,
                                   const PathPair& pair_a,
                                   const PathPair& pair_b) {
  return codable(topology, 0, pair_a, 0, pair_b);
}

}  // namespace ncopt
