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

#ifndef NCOPT_MATCHING_HPP_
#define NCOPT_MATCHING_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ncopt {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

// Maximum-weight matching in a general undirected graph (Edmonds' blossom
// algorithm with dual variables, O(n^3)). Returns mate[v], or -1 for an
// unmatched vertex. Cardinality is not maximized; edges of non-positive
// weight are never needed. Self-loops are ignored; for parallel edges the
// heaviest one counts.
std::vector<int> max_weight_matching(int num_vertices,
                                     std::span<const WeightedEdge> edges);

std::int64_t matching_weight(std::span<const WeightedEdge> edges,
                             const std::vector<int>& mate);

}  // namespace ncopt

#endif  // NCOPT_MATCHING_HPP_
