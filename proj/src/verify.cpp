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

#include "ncopt/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ncopt/errors.hpp"

namespace ncopt {
namespace {

std::string demand_name(int id) { return "demand " + std::to_string(id); }

bool has_repeat(std::vector<LinkId> links) {
  std::sort(links.begin(), links.end());
  return std::adjacent_find(links.begin(), links.end()) != links.end();
}

class Validator {
 public:
  Validator(const Instance& instance, const DesignSolution& solution)
      : instance_(instance), solution_(solution), topo_(instance.topology) {
    for (int i = 0; i < instance.num_demands(); ++i) {
      index_.emplace(instance.demands[i].id, i);
    }
  }

  std::vector<Violation> run() {
    check_routes();
    check_coverage();
    check_groups();
    check_channels();
    check_metrics();
    check_encryption();
    return std::move(out_);
  }

 private:
  void add(std::string rule, std::string detail) {
    out_.push_back({std::move(rule), std::move(detail)});
  }

  const Demand* demand(int id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &instance_.demands[it->second];
  }

  bool path_ok(const Path& p, const Demand& d, const std::string& what) {
    if (p.nodes.empty() || !is_valid_path(topo_, p)) {
      add("route", what + " is not a valid simple path");
      return false;
    }
    if (p.src() != d.src || p.dst() != d.dst || p.empty()) {
      add("route", what + " does not run from source to destination");
      return false;
    }
    return true;
  }

  void check_routes() {
    std::set<int> seen;
    int previous = 0;
    bool first = true;
    for (const Assignment& a : solution_.assignments) {
      const std::string who = demand_name(a.demand_id);
      const Demand* d = demand(a.demand_id);
      if (!d) {
        add("route", who + " is not part of the instance");
        continue;
      }
      if (!seen.insert(a.demand_id).second) {
        add("route", who + " is assigned twice");
      } else if (!first && a.demand_id < previous) {
        add("route", who + " is out of order");
      }
      first = false;
      previous = a.demand_id;
      const bool working_ok = path_ok(a.route.working, *d, who + " working");
      if (d->is_protected != a.route.has_protection()) {
        add("route", who + (d->is_protected ? " has no protection path"
                                            : " is unprotected but has a "
                                              "protection path"));
        continue;
      }
      if (!a.route.has_protection()) continue;
      const bool protection_ok =
          path_ok(a.route.protection, *d, who + " protection");
      if (working_ok && protection_ok &&
          !edge_disjoint(topo_, a.route.working, a.route.protection)) {
        add("disjointness", who + " working and protection share a fiber");
      }
    }
  }

  void check_coverage() {
    if (instance_.objective != Objective::kMinCost) return;
    for (const Demand& d : instance_.demands) {
      if (!solution_.find(d.id)) {
        add("coverage", demand_name(d.id) + " is not served");
      }
    }
  }

  void check_groups() {
    if (!solution_.coding_groups.empty() && !is_coded(instance_.mode)) {
      add("coding", std::string(to_string(instance_.mode)) +
                        " does not allow coding groups");
    }
    std::set<int> members;
    for (const CodingGroup& g : solution_.coding_groups) {
      const std::string who = "coded pair " + std::to_string(g.demand_a) + "+" +
                              std::to_string(g.demand_b);
      for (int id : {g.demand_a, g.demand_b}) {
        if (!members.insert(id).second) {
          add("coding", demand_name(id) + " belongs to two coded pairs");
        }
      }
      const Assignment* a = solution_.find(g.demand_a);
      const Assignment* b = solution_.find(g.demand_b);
      if (!a || !b) {
        add("coding", who + " has an unserved member");
        continue;
      }
      const auto expected =
          codable(topo_, g.demand_a, a->route, g.demand_b, b->route);
      if (!expected) {
        add("coding", who + " violates the recoverability conditions");
        continue;
      }
      if (!(*expected == g)) {
        add("coding", who + " differs from the group its routes define");
        continue;
      }
      if (instance_.layer() == Layer::kOpaque) continue;
      std::vector<LinkId> branches = g.branch_a.links;
      branches.insert(branches.end(), g.branch_b.links.begin(),
                      g.branch_b.links.end());
      if (has_repeat(branches)) {
        add("coding", who + " branches share a link on one channel");
      }
      if (a->protection_channel != b->protection_channel) {
        add("coding", who + " protections are on different channels");
      }
    }
  }

  void check_channels() {
    const Layer layer = instance_.layer();
    const std::vector<ChannelUse> uses = channel_uses(instance_, solution_);
    if (layer == Layer::kOpaque) {
      std::map<LinkId, std::int64_t> load;
      for (const ChannelUse& use : uses) {
        for (LinkId id : use.links) load[id] += use.width;
      }
      for (const auto& [id, n] : load) {
        if (!topo_.has_link(id)) continue;
        if (n > topo_.link(id).capacity) {
          add("capacity", "link " + std::to_string(id) + " carries " +
                              std::to_string(n) + " channels, capacity " +
                              std::to_string(topo_.link(id).capacity));
        }
      }
      return;
    }
    struct Span {
      int start, end;
      const ChannelUse* use;
    };
    std::map<LinkId, std::vector<Span>> spans;
    for (const ChannelUse& use : uses) {
      if (!use.channel) {
        add("continuity", use.owner + " has no channel");
        continue;
      }
      const Channel ch = *use.channel;
      if (ch.width != use.width) {
        add("continuity", use.owner + " channel width " +
                              std::to_string(ch.width) + ", needs " +
                              std::to_string(use.width));
      }
      if (has_repeat(use.links)) {
        add("overlap", use.owner + " uses one link twice on its channel");
      }
      for (LinkId id : use.links) {
        if (!topo_.has_link(id)) continue;
        if (ch.start < 0 || ch.start + ch.width > topo_.link(id).capacity) {
          add("capacity", use.owner + " channel [" + std::to_string(ch.start) +
                              "," + std::to_string(ch.start + ch.width) +
                              ") exceeds link " + std::to_string(id));
        }
        spans[id].push_back({ch.start, ch.start + ch.width, &use});
      }
    }
    for (auto& [id, list] : spans) {
      std::sort(list.begin(), list.end(),
                [](const Span& x, const Span& y) { return x.start < y.start; });
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          if (list[j].start >= list[i].end) break;
          if (list[i].use == list[j].use) continue;
          add("overlap", list[i].use->owner + " and " + list[j].use->owner +
                             " overlap on link " + std::to_string(id));
        }
      }
    }
  }

  void check_metrics() {
    if (!out_.empty()) {
      // Broken routes make the recomputation meaningless or throw.
      return;
    }
    try {
      objective_value(instance_, solution_);
    } catch (const InconsistencyError& e) {
      add("metrics", e.what());
    }
  }

  void check_encryption() {
    std::set<int> covered;
    for (const EncryptedFlow& f : solution_.encrypted_flows) {
      const std::string who = demand_name(f.confidential_demand);
      const Demand* d = demand(f.confidential_demand);
      const Demand* c = demand(f.carrier_demand);
      const Assignment* a = solution_.find(f.confidential_demand);
      if (!d || !d->confidential || !a) {
        add("encryption", who + " is not a served confidential demand");
        continue;
      }
      covered.insert(d->id);
      if (!c || c->id == d->id || c->confidential || !solution_.find(c->id) ||
          c->dst != d->dst) {
        add("encryption", who + " has an unusable carrier " +
                              std::to_string(f.carrier_demand));
      }
      if (!(f.shared_route == a->route.working)) {
        add("encryption", who + " encrypted route is not its working path");
      } else if (std::find(f.shared_route.nodes.begin(),
                           f.shared_route.nodes.end(),
                           f.encoding_node) == f.shared_route.nodes.end()) {
        add("encryption", who + " encoding node is off its route");
      }
    }
    for (const Assignment& a : solution_.assignments) {
      const Demand* d = demand(a.demand_id);
      if (!d || !d->confidential || covered.contains(d->id)) continue;
      for (const Assignment& other : solution_.assignments) {
        const Demand* o = demand(other.demand_id);
        if (o && !o->confidential && o->dst == d->dst) {
          add("encryption", demand_name(d->id) +
                                " travels unencrypted although demand " +
                                std::to_string(o->id) + " could carry its key");
          break;
        }
      }
    }
  }

  const Instance& instance_;
  const DesignSolution& solution_;
  const Topology& topo_;
  std::unordered_map<int, int> index_;
  std::vector<Violation> out_;
};

const BitStream& payload_of(const std::map<int, BitStream>& payloads, int id) {
  auto it = payloads.find(id);
  if (it == payloads.end()) {
    throw InvariantError("no payload for " + demand_name(id));
  }
  return it->second;
}

const EncryptedFlow* flow_of(const DesignSolution& solution, int id) {
  for (const EncryptedFlow& f : solution.encrypted_flows) {
    if (f.confidential_demand == id) return &f;
  }
  return nullptr;
}

}  // namespace

std::vector<Violation> validate_solution(const Instance& instance,
                                         const DesignSolution& solution) {
  return Validator(instance, solution).run();
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kDeliveredDirect:
      return "delivered-direct";
    case Outcome::kRecoveredByProtection:
      return "recovered-by-protection";
    case Outcome::kRecoveredByDecode:
      return "recovered-by-decode";
    case Outcome::kLost:
      return "lost";
  }
  return "lost";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  for (Outcome o : {Outcome::kDeliveredDirect, Outcome::kRecoveredByProtection,
                    Outcome::kRecoveredByDecode, Outcome::kLost}) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

std::map<int, BitStream> random_payloads(const Instance& instance,
                                         std::uint64_t seed,
                                         std::size_t length) {
  std::map<int, BitStream> payloads;
  std::mt19937_64 rng(seed);
  for (const Demand& d : instance.demands) {
    payloads.emplace(d.id, BitStream::random(length, rng()));
  }
  return payloads;
}

RecoveryTrace simulate_failure(const Instance& instance,
                               const DesignSolution& solution,
                               EdgeId failed_edge,
                               const std::map<int, BitStream>& payloads) {
  const Topology& topo = instance.topology;
  if (failed_edge < 0 || failed_edge >= topo.num_edges()) {
    throw InvariantError("no fiber " + std::to_string(failed_edge));
  }
  auto alive = [&](const Path& p) {
    for (LinkId id : p.links) {
      if (topo.edge_of(id) == failed_edge) return false;
    }
    return true;
  };

  // What each demand puts on its lightpaths: ciphertext when encrypted.
  std::map<int, BitStream> sent;
  for (const Assignment& a : solution.assignments) {
    const BitStream& own = payload_of(payloads, a.demand_id);
    const EncryptedFlow* f = flow_of(solution, a.demand_id);
    sent[a.demand_id] =
        f ? encrypt_route(payload_of(payloads, f->carrier_demand), own) : own;
  }

  RecoveryTrace trace;
  trace.failed_edge = failed_edge;
  for (const Assignment& a : solution.assignments) {
    DemandOutcome o;
    o.demand_id = a.demand_id;
    const CodingGroup* g = solution.group_of(a.demand_id);
    if (alive(a.route.working)) {
      o.outcome = Outcome::kDeliveredDirect;
      o.recovered = sent[a.demand_id];
    } else if (g) {
      const int other = g->demand_a == a.demand_id ? g->demand_b : g->demand_a;
      const Assignment* b = solution.find(other);
      // The coding node emits the XOR only when both branches arrive.
      if (b && alive(b->route.working) && alive(g->branch_a) &&
          alive(g->branch_b) && alive(g->encoded_segment)) {
        BitStream encoded = xor_combine(sent[g->demand_a], sent[g->demand_b]);
        o.outcome = Outcome::kRecoveredByDecode;
        o.recovered = decode_lost(sent[other], encoded);
        o.decode_surviving = sent[other];
        o.decode_encoded = std::move(encoded);
      }
    } else if (a.route.has_protection() && alive(a.route.protection)) {
      o.outcome = Outcome::kRecoveredByProtection;
      o.recovered = sent[a.demand_id];
    }
    trace.outcomes.push_back(std::move(o));
  }

  // Destinations decrypt with the key they received from the carrier.
  std::map<int, const DemandOutcome*> by_id;
  for (const DemandOutcome& o : trace.outcomes) by_id[o.demand_id] = &o;
  std::map<int, BitStream> keys;
  for (const EncryptedFlow& f : solution.encrypted_flows) {
    auto it = by_id.find(f.carrier_demand);
    if (it != by_id.end() && it->second->outcome != Outcome::kLost) {
      keys[f.confidential_demand] = it->second->recovered;
    }
  }
  for (DemandOutcome& o : trace.outcomes) {
    if (!flow_of(solution, o.demand_id) || o.outcome == Outcome::kLost) {
      continue;
    }
    auto key = keys.find(o.demand_id);
    if (key == keys.end()) {
      o.outcome = Outcome::kLost;
      o.recovered = BitStream();
    } else {
      o.recovered = xor_combine(o.recovered, key->second);
    }
  }

  const Edge& e = topo.edges()[failed_edge];
  const std::string where =
      " after cutting fiber " + std::to_string(e.u) + "-" + std::to_string(e.v);
  for (const DemandOutcome& o : trace.outcomes) {
    const Demand& d = instance.demands[instance.demand_index(o.demand_id)];
    if (o.outcome == Outcome::kLost) {
      if (d.is_protected) {
        throw InconsistencyError("protected " + demand_name(d.id) + " lost" +
                                 where);
      }
      continue;
    }
    if (o.recovered != payload_of(payloads, d.id)) {
      throw InconsistencyError(demand_name(d.id) + " recovered wrong bits" +
                               where);
    }
  }
  return trace;
}

std::vector<RecoveryTrace> simulate_all_failures(
    const Instance& instance, const DesignSolution& solution,
    const std::map<int, BitStream>& payloads) {
  std::vector<RecoveryTrace> traces;
  for (EdgeId e = 0; e < instance.topology.num_edges(); ++e) {
    traces.push_back(simulate_failure(instance, solution, e, payloads));
  }
  return traces;
}

SecurityReport check_security(const Instance& instance,
                              const DesignSolution& solution,
                              const std::map<int, BitStream>& payloads,
                              const BitStream& key_sample) {
  constexpr std::size_t kMinSample = 100000;
  SecurityReport report;
  for (const Assignment& a : solution.assignments) {
    const Demand& d = instance.demands[instance.demand_index(a.demand_id)];
    if (d.confidential && !flow_of(solution, d.id)) {
      throw SecurityViolationError("s1: confidential " + demand_name(d.id) +
                                   " has no encrypted flow");
    }
  }

  DesignSolution plain = solution;
  plain.encrypted_flows.clear();
  const Metrics with = compute_metrics(instance, solution);
  const Metrics without = compute_metrics(instance, plain);

  for (const EncryptedFlow& f : solution.encrypted_flows) {
    const std::string who = demand_name(f.confidential_demand);
    const Assignment* a = solution.find(f.confidential_demand);
    const Assignment* c = solution.find(f.carrier_demand);
    if (!a || !c) {
      throw SecurityViolationError("s2: " + who +
                                   " or its carrier is not served");
    }
    const BitStream& plaintext = payload_of(payloads, f.confidential_demand);
    const BitStream& key = payload_of(payloads, f.carrier_demand);
    const BitStream cipher = encrypt_route(key, plaintext);
    FlowSecurity fs;
    fs.confidential_demand = f.confidential_demand;
    fs.carrier_demand = f.carrier_demand;

    // s1: a passive tap on each hop. Hops before the encoding node still
    // carry the plaintext.
    if (!(f.shared_route == a->route.working)) {
      throw SecurityViolationError("s1: " + who +
                                   " transmits on a route other than the "
                                   "encrypted one");
    }
    const auto& nodes = f.shared_route.nodes;
    const auto enc = std::find(nodes.begin(), nodes.end(), f.encoding_node);
    if (enc == nodes.end()) {
      throw SecurityViolationError("s1: " + who +
                                   " encoding node is not on its route");
    }
    const auto encoded_from = enc - nodes.begin();
    auto tap = [&](LinkId link, bool encrypted) {
      const BitStream& seen = encrypted ? cipher : plaintext;
      if (seen != cipher || seen == plaintext) {
        throw SecurityViolationError("s1: " + who +
                                     " plaintext visible on link " +
                                     std::to_string(link));
      }
      ++fs.tapped_links;
    };
    for (std::size_t i = 0; i < f.shared_route.links.size(); ++i) {
      tap(f.shared_route.links[i], static_cast<long>(i) >= encoded_from);
    }
    const CodingGroup* g = solution.group_of(f.confidential_demand);
    if (g) {
      const Path& branch =
          g->demand_a == f.confidential_demand ? g->branch_a : g->branch_b;
      for (LinkId id : branch.links) tap(id, encoded_from == 0);
    } else if (a->route.has_protection()) {
      for (LinkId id : a->route.protection.links) tap(id, encoded_from == 0);
    }

    // s2: the key arrives over the carrier's working path.
    if (c->route.working.dst() != f.shared_route.dst()) {
      throw SecurityViolationError("s2: carrier of " + who +
                                   " ends at another node");
    }
    if (xor_combine(cipher, key) != plaintext) {
      throw SecurityViolationError("s2: " + who + " does not decrypt");
    }

    // s3: on an idle (all-zero) line the ciphertext is the key itself.
    if (key_sample.size() < kMinSample) {
      throw SecurityViolationError("s3: key sample shorter than 100000 bits");
    }
    const BitStream idle(key_sample.size());
    fs.ones_fraction = encrypt_route(key_sample, idle).ones_fraction();
    if (fs.ones_fraction < 0.49 || fs.ones_fraction > 0.51) {
      std::ostringstream msg;
      msg << "s3: " << who << " ciphertext ones-fraction " << fs.ones_fraction
          << " outside [0.49, 0.51]";
      throw SecurityViolationError(msg.str());
    }

    // s4
    fs.extra_channels = resource_cost(instance.layer(), with) -
                        resource_cost(instance.layer(), without);
    if (fs.extra_channels != 0 ||
        with.max_channel_index != without.max_channel_index) {
      throw SecurityViolationError("s4: " + who + " uses extra channels");
    }
    report.flows.push_back(fs);
  }
  return report;
}

}  // namespace ncopt
