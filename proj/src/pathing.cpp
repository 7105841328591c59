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

#include "ncopt/pathing.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "ncopt/errors.hpp"

namespace ncopt {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

std::string pair_name(NodeId src, NodeId dst) {
  return std::to_string(src) + "->" + std::to_string(dst);
}

void check_endpoints(const Topology& topology, NodeId src, NodeId dst) {
  if (!topology.has_node(src) || !topology.has_node(dst)) {
    throw InvariantError("endpoint of " + pair_name(src, dst) +
                         " not in topology");
  }
  if (src == dst) {
    throw InvariantError("source equals destination (" + std::to_string(src) +
                         ")");
  }
}

// Cost-to-go from every node to `dst` over the directed links, optionally
// ignoring one fiber.
std::unordered_map<NodeId, int> distances_to(const Topology& topology,
                                             NodeId dst,
                                             std::optional<EdgeId> skip = {}) {
  std::unordered_map<NodeId, std::vector<LinkId>> incoming;
  for (const Link& l : topology.links()) incoming[l.dst].push_back(l.id);
  std::unordered_map<NodeId, int> dist;
  for (NodeId n : topology.nodes()) dist[n] = kUnreachable;
  using Entry = std::pair<int, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[dst] = 0;
  queue.emplace(0, dst);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    for (LinkId id : incoming[v]) {
      if (skip && topology.edge_of(id) == *skip) continue;
      const Link& l = topology.link(id);
      if (d + l.cost < dist[l.src]) {
        dist[l.src] = d + l.cost;
        queue.emplace(dist[l.src], l.src);
      }
    }
  }
  return dist;
}

// Best-first enumeration of simple paths in (cost, link sequence) order.
// The priority is cost so far plus the exact cost-to-go, which is consistent,
// so complete paths pop in nondecreasing cost; equal priorities pop in
// link-sequence order, and a partial path's extensions never sort before it.
class PathEnumerator {
 public:
  PathEnumerator(const Topology& topology, NodeId src, NodeId dst)
      : topology_(topology), dst_(dst), to_go_(distances_to(topology, dst)) {
    if (to_go_.at(src) != kUnreachable) {
      queue_.push(Partial{{}, {src}, 0, to_go_.at(src)});
    }
  }

  bool reachable() const { return !queue_.empty() || emitted_ > 0; }

  std::optional<Path> next() {
    while (!queue_.empty()) {
      Partial top = queue_.top();
      queue_.pop();
      const NodeId at = top.nodes.back();
      if (at == dst_) {
        ++emitted_;
        return Path{std::move(top.links), std::move(top.nodes), top.cost};
      }
      for (LinkId id : topology_.out_links(at)) {
        const Link& l = topology_.link(id);
        const int h = to_go_.at(l.dst);
        if (h == kUnreachable) continue;
        if (std::find(top.nodes.begin(), top.nodes.end(), l.dst) !=
            top.nodes.end()) {
          continue;
        }
        Partial child = top;
        child.links.push_back(id);
        child.nodes.push_back(l.dst);
        child.cost += l.cost;
        child.priority = child.cost + h;
        queue_.push(std::move(child));
      }
    }
    return std::nullopt;
  }

 private:
  struct Partial {
    std::vector<LinkId> links;
    std::vector<NodeId> nodes;
    int cost = 0;
    int priority = 0;
  };
  struct Later {
    bool operator()(const Partial& a, const Partial& b) const {
      return std::tie(a.priority, a.links) > std::tie(b.priority, b.links);
    }
  };

  const Topology& topology_;
  NodeId dst_;
  std::unordered_map<NodeId, int> to_go_;
  std::priority_queue<Partial, std::vector<Partial>, Later> queue_;
  int emitted_ = 0;
};

struct PairOrder {
  bool operator()(const PathPair& a, const PathPair& b) const {
    if (a.combined_cost() != b.combined_cost()) {
      return a.combined_cost() < b.combined_cost();
    }
    return std::tie(a.working.links, a.protection.links) <
           std::tie(b.working.links, b.protection.links);
  }
};

std::vector<PathPair> disjoint_pairs(const Topology& topology, NodeId src,
                                     NodeId dst, int k) {
  check_endpoints(topology, src, dst);
  if (k < 1) throw InvariantError("k must be >= 1");
  if (!has_disjoint_pair(topology, src, dst)) {
    throw NoDisjointPairError("no fiber-disjoint path pair for " +
                              pair_name(src, dst));
  }
  PathEnumerator paths(topology, src, dst);
  std::vector<Path> seen;
  std::vector<std::vector<EdgeId>> seen_edges;
  std::set<PathPair, PairOrder> best;
  while (auto next = paths.next()) {
    // Any pair involving this or a later path costs at least
    // cheapest + next->total_cost.
    if (static_cast<int>(best.size()) >= k) {
      const int kth = std::next(best.begin(), k - 1)->combined_cost();
      if (seen.front().total_cost + next->total_cost > kth) break;
    }
    std::vector<EdgeId> edges = edge_set(topology, *next);
    for (std::size_t i = 0; i < seen.size(); ++i) {
      std::vector<EdgeId> shared;
      std::set_intersection(seen_edges[i].begin(), seen_edges[i].end(),
                            edges.begin(), edges.end(),
                            std::back_inserter(shared));
      if (shared.empty()) best.insert(PathPair{seen[i], *next});
    }
    seen.push_back(std::move(*next));
    seen_edges.push_back(std::move(edges));
  }
  std::vector<PathPair> result(best.begin(), best.end());
  if (static_cast<int>(result.size()) > k) result.resize(k);
  return result;
}

}  // namespace

Path make_path(const Topology& topology, std::vector<LinkId> links) {
  if (links.empty()) throw InvariantError("path has no links");
  Path path;
  path.nodes.push_back(topology.link(links.front()).src);
  for (LinkId id : links) {
    const Link& l = topology.link(id);
    if (l.src != path.nodes.back()) {
      throw InvariantError("link " + std::to_string(id) +
                           " does not continue the path");
    }
    if (std::find(path.nodes.begin(), path.nodes.end(), l.dst) !=
        path.nodes.end()) {
      throw InvariantError("path revisits node " + std::to_string(l.dst));
    }
    path.nodes.push_back(l.dst);
    path.total_cost += l.cost;
  }
  path.links = std::move(links);
  return path;
}

Path stub_path(NodeId node) { return Path{{}, {node}, 0}; }

Path subpath(const Topology& topology, const Path& path, int from, int to) {
  if (from == to) return stub_path(path.nodes.at(from));
  return make_path(topology, std::vector<LinkId>(path.links.begin() + from,
                                                 path.links.begin() + to));
}

bool is_valid_path(const Topology& topology, const Path& path) {
  if (path.nodes.size() != path.links.size() + 1) return false;
  if (path.links.empty()) return topology.has_node(path.nodes.front());
  try {
    return make_path(topology, path.links) == path;
  } catch (const Error&) {
    return false;
  }
}

std::vector<EdgeId> edge_set(const Topology& topology, const Path& path) {
  std::vector<EdgeId> edges;
  edges.reserve(path.links.size());
  for (LinkId id : path.links) edges.push_back(topology.edge_of(id));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool edge_disjoint(const Topology& topology, const Path& a, const Path& b) {
  const std::vector<EdgeId> ea = edge_set(topology, a);
  const std::vector<EdgeId> eb = edge_set(topology, b);
  std::vector<EdgeId> shared;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(shared));
  return shared.empty();
}

std::strong_ordering compare_paths(const Path& a, const Path& b) {
  if (auto c = a.total_cost <=> b.total_cost; c != 0) return c;
  return a.links <=> b.links;
}

std::vector<Path> k_shortest_paths(const Topology& topology, NodeId src,
                                   NodeId dst, int k) {
  check_endpoints(topology, src, dst);
  if (k < 1) throw InvariantError("k must be >= 1");
  PathEnumerator paths(topology, src, dst);
  if (!paths.reachable()) {
    throw NoPathError("no path for " + pair_name(src, dst));
  }
  std::vector<Path> result;
  while (static_cast<int>(result.size()) < k) {
    auto next = paths.next();
    if (!next) break;
    result.push_back(std::move(*next));
  }
  return result;
}

std::vector<Path> all_simple_paths(const Topology& topology, NodeId src,
                                   NodeId dst) {
  check_endpoints(topology, src, dst);
  std::vector<Path> result;
  Path current = stub_path(src);
  auto dfs = [&](auto&& self) -> void {
    const NodeId at = current.nodes.back();
    if (at == dst) {
      result.push_back(current);
      return;
    }
    for (LinkId id : topology.out_links(at)) {
      const Link& l = topology.link(id);
      if (std::find(current.nodes.begin(), current.nodes.end(), l.dst) !=
          current.nodes.end()) {
        continue;
      }
      current.links.push_back(id);
      current.nodes.push_back(l.dst);
      current.total_cost += l.cost;
      self(self);
      current.links.pop_back();
      current.nodes.pop_back();
      current.total_cost -= l.cost;
    }
  };
  dfs(dfs);
  std::sort(result.begin(), result.end(), [](const Path& a, const Path& b) {
    return compare_paths(a, b) < 0;
  });
  return result;
}

bool has_disjoint_pair(const Topology& topology, NodeId src, NodeId dst) {
  check_endpoints(topology, src, dst);
  if (distances_to(topology, dst).at(src) == kUnreachable) return false;
  // Two fiber-disjoint paths exist iff no single fiber cut separates the
  // endpoints (antiparallel usage in a 2-flow can always be cancelled).
  for (const Edge& e : topology.edges()) {
    if (distances_to(topology, dst, e.id).at(src) == kUnreachable) {
      return false;
    }
  }
  return true;
}

PathPair disjoint_pair(const Topology& topology, NodeId src, NodeId dst) {
  return disjoint_pairs(topology, src, dst, 1).front();
}

std::vector<PathPair> candidate_pairs(const Topology& topology,
                                      const Demand& demand, int k) {
  if (demand.is_protected) {
    return disjoint_pairs(topology, demand.src, demand.dst, k);
  }
  std::vector<PathPair> result;
  for (Path& p : k_shortest_paths(topology, demand.src, demand.dst, k)) {
    result.push_back(PathPair{std::move(p), Path{}});
  }
  return result;
}

}  // namespace ncopt
