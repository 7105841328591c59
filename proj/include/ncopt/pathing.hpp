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

#ifndef NCOPT_PATHING_HPP_
#define NCOPT_PATHING_HPP_

#include <compare>
#include <vector>

#include "ncopt/topology.hpp"

namespace ncopt {

// A simple directed path. `nodes` has one more entry than `links`. A path
// with no links is a single-node stub (used for an empty coding branch); a
// default-constructed path has no nodes at all and means "absent".
struct Path {
  std::vector<LinkId> links;
  std::vector<NodeId> nodes;
  int total_cost = 0;

  bool empty() const { return links.empty(); }
  NodeId src() const { return nodes.front(); }
  NodeId dst() const { return nodes.back(); }
  int hops() const { return static_cast<int>(links.size()); }

  friend bool operator==(const Path&, const Path&) = default;
};

// Builds a path from link ids and checks it: consecutive, simple, cost
// consistent. Throws InvariantError otherwise.
Path make_path(const Topology& topology, std::vector<LinkId> links);
// The zero-link path sitting at `node`.
Path stub_path(NodeId node);
// links[from, to) of `path`, with its node sequence and recomputed cost.
Path subpath(const Topology& topology, const Path& path, int from, int to);
// Re-verifies every Path invariant against the topology.
bool is_valid_path(const Topology& topology, const Path& path);

// Undirected-edge ids used by the path, sorted.
std::vector<EdgeId> edge_set(const Topology& topology, const Path& path);
// True when the paths share no fiber (either direction counts).
bool edge_disjoint(const Topology& topology, const Path& a, const Path& b);

// Ordering used for every tie-break: cost, then link-id sequence.
std::strong_ordering compare_paths(const Path& a, const Path& b);

// Working path plus link-disjoint protection. For an unprotected demand the
// protection is a default-constructed (absent) Path.
struct PathPair {
  Path working;
  Path protection;

  bool has_protection() const { return !protection.nodes.empty(); }
  int combined_cost() const {
    return working.total_cost + protection.total_cost;
  }

  friend bool operator==(const PathPair&, const PathPair&) = default;
};

// Up to k simple paths, nondecreasing cost, ties by link-id sequence.
// Throws NoPathError when dst is unreachable.
std::vector<Path> k_shortest_paths(const Topology& topology, NodeId src,
                                   NodeId dst, int k);

// Every simple src->dst path in the same order as k_shortest_paths. Meant
// for small graphs and test oracles.
std::vector<Path> all_simple_paths(const Topology& topology, NodeId src,
                                   NodeId dst);

// True when two fiber-disjoint src->dst paths exist, i.e. no single fiber
// cut separates them.
bool has_disjoint_pair(const Topology& topology, NodeId src, NodeId dst);

// Minimum combined-cost fiber-disjoint pair. The cheaper path (by the
// ordering above) is the working path. Throws NoDisjointPairError.
PathPair disjoint_pair(const Topology& topology, NodeId src, NodeId dst);

// Up to k fiber-disjoint pairs in nondecreasing combined cost; element 0 is
// disjoint_pair(). Unprotected demands get their k shortest paths with no
// protection.
std::vector<PathPair> candidate_pairs(const Topology& topology,
                                      const Demand& demand, int k);

}  // namespace ncopt

#endif  // NCOPT_PATHING_HPP_
