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

#include "ncopt/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "ncopt/errors.hpp"
#include "text_util.hpp"

namespace ncopt {
namespace {

std::int64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::int64_t>(a) << 32) ^ static_cast<std::uint32_t>(b);
}

// Unbiased draw from [0, n).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::mt19937_64::max() - (std::mt19937_64::max() % n + 1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

// Undirected edges of the shipped COST239 instance. Node degrees: 1,2,4,5
// have 4; 3,7,8,9,10,11 have 5; 6 has 6.
constexpr std::pair<int, int> kCost239Edges[] = {
    {1, 4},  {1, 6},  {1, 7},  {1, 9},  {2, 3},   {2, 6}, {2, 7},
    {2, 10}, {3, 4},  {3, 6},  {3, 8},  {3, 10},  {4, 5}, {4, 10},
    {5, 6},  {5, 8},  {5, 11}, {6, 8},  {6, 9},   {7, 8}, {7, 9},
    {7, 11}, {8, 11}, {9, 10}, {9, 11}, {10, 11},
};

}  // namespace

Topology::Topology(std::string name, Technology technology,
                   std::vector<NodeId> nodes, std::vector<Link> links)
    : name_(std::move(name)),
      technology_(technology),
      nodes_(std::move(nodes)),
      links_(std::move(links)) {
  if (name_.empty()) throw InvariantError("topology name is empty");
  for (int i = 0; i < num_nodes(); ++i) {
    if (!node_index_.emplace(nodes_[i], i).second) {
      throw InvariantError("duplicate node " + std::to_string(nodes_[i]));
    }
  }
  out_links_.resize(nodes_.size());

  std::set<std::pair<NodeId, NodeId>> ordered_pairs;
  for (int i = 0; i < num_links(); ++i) {
    const Link& l = links_[i];
    const std::string who = "link " + std::to_string(l.id);
    if (!link_index_.emplace(l.id, i).second) {
      throw InvariantError("duplicate " + who);
    }
    if (!has_node(l.src)) {
      throw InvariantError(who + ": unknown source node " +
                           std::to_string(l.src));
    }
    if (!has_node(l.dst)) {
      throw InvariantError(who + ": unknown destination node " +
                           std::to_string(l.dst));
    }
    if (l.src == l.dst) throw InvariantError(who + ": self-loop");
    if (l.cost < 0) throw InvariantError(who + ": negative cost");
    if (l.capacity < 1) throw InvariantError(who + ": capacity must be >= 1");
    if (!ordered_pairs.emplace(l.src, l.dst).second) {
      throw InvariantError(who + ": parallel link " + std::to_string(l.src) +
                           "->" + std::to_string(l.dst));
    }
    out_links_[node_index(l.src)].push_back(l.id);
  }
  for (auto& out : out_links_) std::sort(out.begin(), out.end());

  std::set<std::pair<NodeId, NodeId>> unordered;
  for (const Link& l : links_) {
    unordered.emplace(std::min(l.src, l.dst), std::max(l.src, l.dst));
  }
  for (const auto& [u, v] : unordered) {
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, u, v});
    edge_by_pair_.emplace(pair_key(u, v), id);
  }
  link_edge_.reserve(links_.size());
  for (const Link& l : links_) {
    link_edge_.push_back(edge_by_pair_.at(pair_key(l.src, l.dst)));
  }
}

bool Topology::has_node(NodeId node) const {
  return node_index_.contains(node);
}

int Topology::node_index(NodeId node) const {
  auto it = node_index_.find(node);
  if (it == node_index_.end()) {
    throw InvariantError("unknown node " + std::to_string(node));
  }
  return it->second;
}

const Link& Topology::link(LinkId id) const {
  auto it = link_index_.find(id);
  if (it == link_index_.end()) {
    throw InvariantError("unknown link " + std::to_string(id));
  }
  return links_[it->second];
}

std::optional<LinkId> Topology::find_link(NodeId src, NodeId dst) const {
  if (!has_node(src)) return std::nullopt;
  for (LinkId id : out_links(src)) {
    if (link(id).dst == dst) return id;
  }
  return std::nullopt;
}

std::span<const LinkId> Topology::out_links(NodeId node) const {
  return out_links_[node_index(node)];
}

EdgeId Topology::edge_of(LinkId id) const {
  auto it = link_index_.find(id);
  if (it == link_index_.end()) {
    throw InvariantError("unknown link " + std::to_string(id));
  }
  return link_edge_[it->second];
}

std::optional<EdgeId> Topology::find_edge(NodeId a, NodeId b) const {
  auto it = edge_by_pair_.find(pair_key(a, b));
  if (it == edge_by_pair_.end()) return std::nullopt;
  return it->second;
}

int Topology::degree(NodeId node) const {
  node_index(node);
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == node) + (e.v == node);
  return d;
}

std::vector<EdgeId> Topology::bridges() const {
  const int n = num_nodes();
  std::vector<std::vector<std::pair<int, EdgeId>>> adj(n);
  for (const Edge& e : edges_) {
    adj[node_index(e.u)].emplace_back(node_index(e.v), e.id);
    adj[node_index(e.v)].emplace_back(node_index(e.u), e.id);
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> result;
  int timer = 0;
  std::function<void(int, EdgeId)> dfs = [&](int u, EdgeId via) {
    disc[u] = low[u] = timer++;
    for (auto [w, e] : adj[u]) {
      if (e == via) continue;
      if (disc[w] < 0) {
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) result.push_back(e);
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int u = 0; u < n; ++u) {
    if (disc[u] < 0) dfs(u, -1);
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool Topology::is_two_edge_connected() const {
  if (num_nodes() < 2) return false;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const Edge& e : edges_) {
      int a = node_index(e.u), b = node_index(e.v);
      int w = a == u ? b : (b == u ? a : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == num_nodes() && bridges().empty();
}

int Topology::max_capacity() const {
  int best = 0;
  for (const Link& l : links_) best = std::max(best, l.capacity);
  return best;
}

bool Topology::uniform_capacity() const {
  return std::all_of(links_.begin(), links_.end(), [&](const Link& l) {
    return l.capacity == links_.front().capacity;
  });
}

Topology Topology::with_capacity(int capacity) const {
  std::vector<Link> links = links_;
  for (Link& l : links) l.capacity = capacity;
  return Topology(name_, technology_, nodes_, std::move(links));
}

Topology Topology::with_technology(Technology technology) const {
  return Topology(name_, technology, nodes_, links_);
}

Topology load_topology(std::string_view text) {
  std::optional<std::string> name;
  Technology technology = Technology::kWdm;
  std::vector<NodeId> nodes;
  std::vector<Link> links;
  for (const detail::Line& line : detail::tokenize(text)) {
    std::string_view kind = line.tokens[0];
    if (kind == "topology") {
      detail::expect_arity(line, 3);
      if (name) throw ParseError(line.number, "duplicate topology header");
      name = std::string(line.tokens[1]);
      if (line.tokens[2] == "wdm") {
        technology = Technology::kWdm;
      } else if (line.tokens[2] == "eon") {
        technology = Technology::kEon;
      } else {
        throw ParseError(line.number, "mode must be 'wdm' or 'eon'");
      }
    } else if (kind == "node") {
      detail::expect_arity(line, 2);
      nodes.push_back(detail::parse_int(line, 1, "id"));
    } else if (kind == "link") {
      detail::expect_arity(line, 6);
      Link l;
      l.id = detail::parse_int(line, 1, "id");
      l.src = detail::parse_int(line, 2, "src");
      l.dst = detail::parse_int(line, 3, "dst");
      l.cost = detail::parse_int(line, 4, "cost");
      l.capacity = detail::parse_int(line, 5, "capacity");
      links.push_back(l);
    } else {
      throw ParseError(line.number,
                       "unknown record '" + std::string(kind) + "'");
    }
    if (!name) throw ParseError(line.number, "missing topology header");
  }
  if (!name) throw ParseError(0, "empty topology document");
  return Topology(*name, technology, std::move(nodes), std::move(links));
}

std::string render_topology(const Topology& topology) {
  std::ostringstream out;
  out << "topology " << topology.name() << ' '
      << (topology.technology() == Technology::kWdm ? "wdm" : "eon") << '\n';
  for (NodeId n : topology.nodes()) out << "node " << n << '\n';
  for (const Link& l : topology.links()) {
    out << "link " << l.id << ' ' << l.src << ' ' << l.dst << ' ' << l.cost
        << ' ' << l.capacity << '\n';
  }
  return out.str();
}

Topology load_topology_file(const std::string& path) {
  return load_topology(detail::read_file(path));
}

std::vector<Demand> load_demands(std::string_view text,
                                 const Topology* topology) {
  std::vector<Demand> demands;
  std::set<int> ids;
  for (const detail::Line& line : detail::tokenize(text)) {
    if (line.tokens[0] != "demand") {
      throw ParseError(line.number,
                       "unknown record '" + std::string(line.tokens[0]) + "'");
    }
    detail::expect_arity(line, 7);
    Demand d;
    d.id = detail::parse_int(line, 1, "id");
    d.src = detail::parse_int(line, 2, "src");
    d.dst = detail::parse_int(line, 3, "dst");
    d.rate_slots = detail::parse_int(line, 4, "rate");
    d.is_protected = detail::parse_flag(line, 5, "protected");
    d.confidential = detail::parse_flag(line, 6, "confidential");
    const std::string who = "demand " + std::to_string(d.id);
    if (!ids.insert(d.id).second) throw InvariantError("duplicate " + who);
    if (d.src == d.dst)
      throw InvariantError(who + ": source equals destination");
    if (d.rate_slots < 1) throw InvariantError(who + ": rate must be >= 1");
    if (topology &&
        (!topology->has_node(d.src) || !topology->has_node(d.dst))) {
      throw InvariantError(who + ": endpoint not in topology");
    }
    demands.push_back(d);
  }
  return demands;
}

std::string render_demands(std::span<const Demand> demands) {
  std::ostringstream out;
  for (const Demand& d : demands) {
    out << "demand " << d.id << ' ' << d.src << ' ' << d.dst << ' '
        << d.rate_slots << ' ' << (d.is_protected ? 1 : 0) << ' '
        << (d.confidential ? 1 : 0) << '\n';
  }
  return out.str();
}

std::vector<Demand> load_demands_file(const std::string& path,
                                      const Topology* topology) {
  return load_demands(detail::read_file(path), topology);
}

Topology builtin_cost239(int capacity, Technology technology) {
  std::vector<NodeId> nodes;
  for (NodeId n = 1; n <= 11; ++n) nodes.push_back(n);
  std::vector<Link> links;
  LinkId next = 1;
  for (auto [u, v] : kCost239Edges) {
    links.push_back({next++, u, v, 1, capacity});
    links.push_back({next++, v, u, 1, capacity});
  }
  Topology topology("cost239", technology, std::move(nodes), std::move(links));

  static const std::map<NodeId, int> kDegrees{{1, 4}, {2, 4},  {3, 5}, {4, 4},
                                              {5, 4}, {6, 6},  {7, 5}, {8, 5},
                                              {9, 5}, {10, 5}, {11, 5}};
  for (auto [node, degree] : kDegrees) {
    if (topology.degree(node) != degree) {
      throw InvariantError("cost239 self-check: degree of node " +
                           std::to_string(node));
    }
  }
  if (!topology.is_two_edge_connected()) {
    throw InvariantError("cost239 self-check: not 2-edge-connected");
  }
  return topology;
}

std::vector<Demand> generate_demands(const Topology& topology, int count,
                                     std::uint64_t seed, int rate_max) {
  if (count < 1) throw InvariantError("demand count must be >= 1");
  if (rate_max < 1) throw InvariantError("rate_max must be >= 1");
  const auto n = static_cast<std::uint64_t>(topology.num_nodes());
  if (n < 2) throw InvariantError("topology needs at least two nodes");
  std::mt19937_64 rng(seed);
  std::vector<Demand> demands;
  demands.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t pick = draw(rng, n * (n - 1));
    const std::uint64_t s = pick / (n - 1);
    std::uint64_t t = pick % (n - 1);
    if (t >= s) ++t;
    Demand d;
    d.id = i + 1;
    d.src = topology.nodes()[s];
    d.dst = topology.nodes()[t];
    d.rate_slots = 1 + static_cast<int>(draw(rng, rate_max));
    demands.push_back(d);
  }
  return demands;
}

ModelStats model_stats(const Topology& topology,
                       std::span<const Demand> demands, ProblemMode) {
  // Capacity is a scalar in every built-in instance; for per-link overrides
  // the largest one is reported.
  return ModelStats{static_cast<int>(demands.size()), topology.num_nodes(),
                    topology.num_links(), topology.max_capacity()};
}

}  // namespace ncopt
