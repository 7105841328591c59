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

// Network and traffic model: directed optical links grouped into undirected
// fibers, protected demands, the text formats for both, the built-in COST239
// instance and a seeded demand generator.

#ifndef NCOPT_TOPOLOGY_HPP_
#define NCOPT_TOPOLOGY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncopt/mode.hpp"

namespace ncopt {

using NodeId = int;
using LinkId = int;
// Index of an undirected fiber (unordered node pair) in Topology::edges().
using EdgeId = int;

// Which capacity unit the topology file describes: wavelengths or slots.
enum class Technology { kWdm, kEon };

struct Link {
  LinkId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  int cost = 1;
  // Wavelengths (WDM) or spectrum slots (EON) on this directed link.
  int capacity = 1;

  friend bool operator==(const Link&, const Link&) = default;
};

// An undirected fiber; u < v. Both directed links between u and v, when
// present, fail together.
struct Edge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Topology {
 public:
  Topology() = default;
  // Validates every invariant and throws InvariantError naming the offending
  // node or link.
  Topology(std::string name, Technology technology, std::vector<NodeId> nodes,
           std::vector<Link> links);

  const std::string& name() const { return name_; }
  Technology technology() const { return technology_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_node(NodeId node) const;
  bool has_link(LinkId id) const { return link_index_.contains(id); }
  const Link& link(LinkId id) const;
  std::optional<LinkId> find_link(NodeId src, NodeId dst) const;
  // Outgoing link ids sorted ascending.
  std::span<const LinkId> out_links(NodeId node) const;

  EdgeId edge_of(LinkId id) const;
  // Edge between two nodes regardless of direction.
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  // Number of undirected neighbours.
  int degree(NodeId node) const;

  // Undirected view: connected and free of bridges.
  bool is_two_edge_connected() const;
  std::vector<EdgeId> bridges() const;

  // Largest per-link capacity; 0 for a link-free topology.
  int max_capacity() const;
  bool uniform_capacity() const;

  Topology with_capacity(int capacity) const;
  Topology with_technology(Technology technology) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.name_ == b.name_ && a.technology_ == b.technology_ &&
           a.nodes_ == b.nodes_ && a.links_ == b.links_;
  }

 private:
  int node_index(NodeId node) const;

  std::string name_;
  Technology technology_ = Technology::kWdm;
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::vector<Edge> edges_;
  std::unordered_map<LinkId, int> link_index_;
  std::unordered_map<NodeId, int> node_index_;
  std::vector<std::vector<LinkId>> out_links_;
  std::vector<EdgeId> link_edge_;
  std::unordered_map<std::int64_t, EdgeId> edge_by_pair_;
};

struct Demand {
  int id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  int rate_slots = 1;
  bool is_protected = true;
  bool confidential = false;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct ModelStats {
  int num_demands = 0;
  int num_nodes = 0;
  int num_links = 0;
  // |W| in WDM modes, |S| in EON modes.
  int capacity_per_link = 0;

  friend bool operator==(const ModelStats&, const ModelStats&) = default;
};

// Text formats. Topology:
//   topology <name> <wdm|eon>
//   node <id>
//   link <id> <src> <dst> <cost> <capacity>
// Demands:
//   demand <id> <src> <dst> <rate> <protected:0|1> <confidential:0|1>
// '#' starts a comment; blank lines are ignored.
Topology load_topology(std::string_view text);
std::string render_topology(const Topology& topology);
Topology load_topology_file(const std::string& path);

// Demand endpoints are checked against the topology when one is given.
std::vector<Demand> load_demands(std::string_view text,
                                 const Topology* topology = nullptr);
std::string render_demands(std::span<const Demand> demands);
std::vector<Demand> load_demands_file(const std::string& path,
                                      const Topology* topology = nullptr);

// 11 nodes, 26 fibers, each realized as two opposite links of cost 1.
Topology builtin_cost239(int capacity = 8,
                         Technology technology = Technology::kWdm);

std::vector<Demand> generate_demands(const Topology& topology, int count,
                                     std::uint64_t seed, int rate_max);

ModelStats model_stats(const Topology& topology,
                       std::span<const Demand> demands, ProblemMode mode);

}  // namespace ncopt

#endif  // NCOPT_TOPOLOGY_HPP_
