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

// Problem instances and solutions for the six design problems.
//
// The formulation is path based: every demand picks one of its k candidate
// path pairs, coded modes may additionally pair two demands on a codable
// combination of their candidates, and transparent/elastic modes give every
// lightpath a wavelength index or a contiguous slot interval kept along the
// whole route. A coded pair's two protection routes form one channel object:
// both branches and the encoded segment use the same wavelength (or the same
// interval, as wide as the wider demand).

#ifndef NCOPT_DESIGN_HPP_
#define NCOPT_DESIGN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncopt/coding.hpp"
#include "ncopt/mode.hpp"
#include "ncopt/pathing.hpp"
#include "ncopt/topology.hpp"

namespace ncopt {

// A codable combination of two demands' candidates. Demand fields are
// indices into Instance::demands with demand_a < demand_b.
struct CodingCandidate {
  int demand_a = 0;
  int candidate_a = 0;
  int demand_b = 0;
  int candidate_b = 0;
  CodingGroup group;
  // Resource cost of routing both candidates uncoded minus coded. Always
  // positive on WDM layers; can be zero or negative on the elastic layer,
  // where the narrower demand is padded.
  std::int64_t saving = 0;
};

struct Instance {
  Topology topology;
  std::vector<Demand> demands;
  ProblemMode mode = ProblemMode::kRouting;
  Objective objective = Objective::kMinCost;
  int k = 4;
  // Per demand, in nondecreasing combined cost. Empty means unservable
  // (only possible with kMaxThroughput).
  std::vector<std::vector<PathPair>> candidates;
  // Empty for uncoded modes.
  std::vector<CodingCandidate> coding_candidates;
  ModelStats stats;

  Layer layer() const { return layer_of(mode); }
  int num_demands() const { return static_cast<int>(demands.size()); }
  // Index into `demands`; throws InvariantError for unknown ids.
  int demand_index(int demand_id) const;
  // Resource cost of candidate c of demand d routed uncoded.
  std::int64_t candidate_cost(int d, int c) const;
};

Instance build_instance(Topology topology, std::vector<Demand> demands,
                        ProblemMode mode, Objective objective, int k);

// Wavelength index (width 1) or slot interval [start, start + width).
struct Channel {
  int start = 0;
  int width = 1;

  friend bool operator==(const Channel&, const Channel&) = default;
};

struct Assignment {
  int demand_id = 0;
  PathPair route;
  // Set on transparent and elastic layers only. For a coded pair both
  // members carry the group's shared protection channel.
  std::optional<Channel> working_channel;
  std::optional<Channel> protection_channel;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Metrics {
  // Channel-links weighted by link cost: one unit per lightpath per link,
  // an encoded segment counted once.
  std::int64_t routing_cost = 0;
  // Transparent layer: the same count under the wavelength assignment.
  std::int64_t wavelength_cost = 0;
  // Elastic layer: slot-links weighted by link cost.
  std::int64_t spectrum_cost = 0;
  std::int64_t served_rate = 0;
  int served_demands = 0;
  std::int64_t transponder_count = 0;
  // Highest wavelength index or slot used, plus one.
  int max_channel_index = 0;
  // Elastic layer: slot-links spent widening the narrower protection of a
  // coded pair.
  std::int64_t padding_slots = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct DesignSolution {
  // Sorted by demand id; unserved demands are absent.
  std::vector<Assignment> assignments;
  std::vector<CodingGroup> coding_groups;
  std::vector<EncryptedFlow> encrypted_flows;
  Metrics metrics;
  bool proved_optimal = false;

  const Assignment* find(int demand_id) const;
  const CodingGroup* group_of(int demand_id) const;

  friend bool operator==(const DesignSolution&,
                         const DesignSolution&) = default;
};

// One capacity-consuming object: a lightpath, or a coded pair's merged
// protection. `links` lists every directed link it occupies; a link listed
// twice means the object collides with itself.
struct ChannelUse {
  std::string owner;
  std::vector<LinkId> links;
  int width = 1;
  std::optional<Channel> channel;
};

std::vector<ChannelUse> channel_uses(const Instance& instance,
                                     const DesignSolution& solution);

// Recomputes every metric from the assignments.
Metrics compute_metrics(const Instance& instance,
                        const DesignSolution& solution);

// Recomputes the metrics and checks them against the stored ones; throws
// InconsistencyError on any difference.
Metrics objective_value(const Instance& instance,
                        const DesignSolution& solution);

// The metric minimized on the instance's layer: routing, wavelength or
// spectrum cost.
std::int64_t resource_cost(Layer layer, const Metrics& metrics);

std::map<NodeId, std::int64_t> transponders_per_node(
    const Instance& instance, const DesignSolution& solution);

// Variable count of the link-indexed MILP encoding of the formulation:
// a binary per (demand, directed link, role) with roles {working,
// protection}, times |V| for the coding node in coded modes, times |W| or
// |S| for the channel index on transparent/elastic layers. The constant is 2
// in every mode, e.g. ROUTING = 2|D||E| and RSNCA = 2|D||V||E||S|.
std::int64_t variable_count(const Instance& instance);

// Printable asymptotic family, e.g. "O(|D||V||E||W|)".
std::string complexity_family(ProblemMode mode);

// Picks a carrier for every served confidential demand: the lowest-id
// served non-confidential demand with the same destination. A confidential
// carrier could key two flows with each other's ciphertext, so none is used;
// without a carrier the demand gets no flow. Encoding happens at the
// confidential demand's source.
void attach_encryption(const Instance& instance, DesignSolution& solution);

}  // namespace ncopt

#endif  // NCOPT_DESIGN_HPP_
