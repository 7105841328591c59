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

#include "ncopt/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ncopt/errors.hpp"

namespace ncopt {
namespace {

std::int64_t links_cost(const Topology& topology,
                        const std::vector<LinkId>& links) {
  std::int64_t total = 0;
  for (LinkId id : links) total += topology.link(id).cost;
  return total;
}

bool branches_collide(const CodingGroup& group) {
  std::set<LinkId> seen(group.branch_a.links.begin(),
                        group.branch_a.links.end());
  return std::any_of(group.branch_b.links.begin(), group.branch_b.links.end(),
                     [&](LinkId id) { return seen.contains(id); });
}

std::int64_t width_of(Layer layer, const Demand& demand) {
  return layer == Layer::kElastic ? demand.rate_slots : 1;
}

}  // namespace

int Instance::demand_index(int demand_id) const {
  for (int i = 0; i < num_demands(); ++i) {
    if (demands[i].id == demand_id) return i;
  }
  throw InvariantError("unknown demand " + std::to_string(demand_id));
}

std::int64_t Instance::candidate_cost(int d, int c) const {
  return width_of(layer(), demands[d]) * candidates[d][c].combined_cost();
}

Instance build_instance(Topology topology, std::vector<Demand> demands,
                        ProblemMode mode, Objective objective, int k) {
  if (k < 1) throw InvariantError("k must be >= 1");
  Instance instance;
  instance.topology = std::move(topology);
  instance.demands = std::move(demands);
  instance.mode = mode;
  instance.objective = objective;
  instance.k = k;
  const Topology& topo = instance.topology;
  const Layer layer = instance.layer();

  std::set<int> ids;
  for (const Demand& d : instance.demands) {
    const std::string who = "demand " + std::to_string(d.id);
    if (!ids.insert(d.id).second) throw InvariantError("duplicate " + who);
    if (!topo.has_node(d.src) || !topo.has_node(d.dst)) {
      throw InvariantError(who + ": endpoint not in topology");
    }
    if (d.src == d.dst)
      throw InvariantError(who + ": source equals destination");
    if (d.rate_slots < 1) throw InvariantError(who + ": rate must be >= 1");
    if (layer != Layer::kElastic && d.rate_slots != 1) {
      throw InvariantError(who + ": WDM modes require rate 1");
    }
  }

  for (const Demand& d : instance.demands) {
    try {
      instance.candidates.push_back(candidate_pairs(topo, d, k));
    } catch (const NoDisjointPairError& e) {
      if (objective == Objective::kMinCost) {
        throw InfeasibleError(
            "demand " + std::to_string(d.id) + ": " + e.what(), d.id);
      }
      instance.candidates.emplace_back();
    } catch (const NoPathError& e) {
      if (objective == Objective::kMinCost) {
        throw InfeasibleError(
            "demand " + std::to_string(d.id) + ": " + e.what(), d.id);
      }
      instance.candidates.emplace_back();
    }
  }

  if (is_coded(mode)) {
    const int n = instance.num_demands();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Demand& da = instance.demands[a];
        const Demand& db = instance.demands[b];
        if (da.dst != db.dst) continue;
        for (int ca = 0; ca < static_cast<int>(instance.candidates[a].size());
             ++ca) {
          for (int cb = 0; cb < static_cast<int>(instance.candidates[b].size());
               ++cb) {
            const PathPair& pa = instance.candidates[a][ca];
            const PathPair& pb = instance.candidates[b][cb];
            auto group = codable(topo, da.id, pa, db.id, pb);
            if (!group) continue;
            // One wavelength / interval for both branches: a shared branch
            // link would need it twice.
            if (layer != Layer::kOpaque && branches_collide(*group)) continue;
            const std::int64_t wa = width_of(layer, da);
            const std::int64_t wb = width_of(layer, db);
            const std::int64_t w = std::max(wa, wb);
            const std::int64_t uncoded =
                wa * pa.protection.total_cost + wb * pb.protection.total_cost;
            const std::int64_t coded =
                w * (group->branch_a.total_cost + group->branch_b.total_cost +
                     group->encoded_segment.total_cost);
            instance.coding_candidates.push_back(
                {a, ca, b, cb, std::move(*group), uncoded - coded});
          }
        }
      }
    }
  }
  instance.stats = model_stats(topo, instance.demands, mode);
  return instance;
}

const Assignment* DesignSolution::find(int demand_id) const {
  for (const Assignment& a : assignments) {
    if (a.demand_id == demand_id) return &a;
  }
  return nullptr;
}

const CodingGroup* DesignSolution::group_of(int demand_id) const {
  for (const CodingGroup& g : coding_groups) {
    if (g.demand_a == demand_id || g.demand_b == demand_id) return &g;
  }
  return nullptr;
}

std::vector<ChannelUse> channel_uses(const Instance& instance,
                                     const DesignSolution& solution) {
  const Layer layer = instance.layer();
  std::vector<ChannelUse> uses;
  for (const Assignment& a : solution.assignments) {
    const Demand& d = instance.demands[instance.demand_index(a.demand_id)];
    const std::string who = "demand " + std::to_string(a.demand_id);
    uses.push_back({who + " working", a.route.working.links,
                    static_cast<int>(width_of(layer, d)), a.working_channel});
    if (a.route.has_protection() && !solution.group_of(a.demand_id)) {
      uses.push_back({who + " protection", a.route.protection.links,
                      static_cast<int>(width_of(layer, d)),
                      a.protection_channel});
    }
  }
  for (const CodingGroup& g : solution.coding_groups) {
    const Assignment* a = solution.find(g.demand_a);
    const Assignment* b = solution.find(g.demand_b);
    if (!a || !b) continue;
    ChannelUse use;
    use.owner = "coded pair " + std::to_string(g.demand_a) + "+" +
                std::to_string(g.demand_b);
    use.links = g.branch_a.links;
    use.links.insert(use.links.end(), g.branch_b.links.begin(),
                     g.branch_b.links.end());
    use.links.insert(use.links.end(), g.encoded_segment.links.begin(),
                     g.encoded_segment.links.end());
    const Demand& da = instance.demands[instance.demand_index(g.demand_a)];
    const Demand& db = instance.demands[instance.demand_index(g.demand_b)];
    use.width =
        static_cast<int>(std::max(width_of(layer, da), width_of(layer, db)));
    use.channel = a->protection_channel;
    uses.push_back(std::move(use));
  }
  return uses;
}

std::map<NodeId, std::int64_t> transponders_per_node(
    const Instance& instance, const DesignSolution& solution) {
  const bool opaque = instance.layer() == Layer::kOpaque;
  std::map<NodeId, std::int64_t> count;
  // Opaque nodes regenerate every transiting signal.
  auto transits = [&](const Path& p) {
    if (!opaque || p.nodes.size() < 3) return;
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) ++count[p.nodes[i]];
  };
  auto lightpath = [&](const Path& p) {
    ++count[p.src()];
    ++count[p.dst()];
    transits(p);
  };
  for (const Assignment& a : solution.assignments) {
    lightpath(a.route.working);
    if (a.route.has_protection() && !solution.group_of(a.demand_id)) {
      lightpath(a.route.protection);
    }
  }
  for (const CodingGroup& g : solution.coding_groups) {
    for (const Path* branch : {&g.branch_a, &g.branch_b}) {
      if (branch->empty()) continue;
      ++count[branch->src()];
      transits(*branch);
    }
    // One transponder modulates the encoded signal in an opaque node; an
    // all-optical node needs one only to launch a source's own signal.
    if (opaque || g.branch_a.empty() || g.branch_b.empty()) {
      ++count[g.coding_node];
    }
    transits(g.encoded_segment);
    ++count[g.encoded_segment.dst()];
  }
  return count;
}

Metrics compute_metrics(const Instance& instance,
                        const DesignSolution& solution) {
  const Layer layer = instance.layer();
  const Topology& topo = instance.topology;
  Metrics m;
  for (const ChannelUse& use : channel_uses(instance, solution)) {
    const std::int64_t cost = links_cost(topo, use.links);
    m.routing_cost += cost;
    if (layer == Layer::kElastic) m.spectrum_cost += use.width * cost;
    if (layer != Layer::kOpaque && use.channel) {
      m.max_channel_index = std::max(m.max_channel_index,
                                     use.channel->start + use.channel->width);
    }
  }
  if (layer == Layer::kTransparent) m.wavelength_cost = m.routing_cost;
  for (const Assignment& a : solution.assignments) {
    m.served_rate +=
        instance.demands[instance.demand_index(a.demand_id)].rate_slots;
    ++m.served_demands;
  }
  for (const auto& [node, n] : transponders_per_node(instance, solution)) {
    m.transponder_count += n;
  }
  if (layer == Layer::kElastic) {
    for (const CodingGroup& g : solution.coding_groups) {
      const int ra =
          instance.demands[instance.demand_index(g.demand_a)].rate_slots;
      const int rb =
          instance.demands[instance.demand_index(g.demand_b)].rate_slots;
      const int w = std::max(ra, rb);
      m.padding_slots += (w - ra) * std::int64_t{g.branch_a.total_cost} +
                         (w - rb) * std::int64_t{g.branch_b.total_cost};
    }
  }
  return m;
}

Metrics objective_value(const Instance& instance,
                        const DesignSolution& solution) {
  const Metrics m = compute_metrics(instance, solution);
  if (m == solution.metrics) return m;
  std::ostringstream out;
  out << "stored metrics disagree with recomputation:";
  auto check = [&](const char* name, std::int64_t stored,
                   std::int64_t recomputed) {
    if (stored != recomputed) {
      out << ' ' << name << ' ' << stored << "!=" << recomputed;
    }
  };
  check("routing_cost", solution.metrics.routing_cost, m.routing_cost);
  check("wavelength_cost", solution.metrics.wavelength_cost, m.wavelength_cost);
  check("spectrum_cost", solution.metrics.spectrum_cost, m.spectrum_cost);
  check("served_rate", solution.metrics.served_rate, m.served_rate);
  check("served_demands", solution.metrics.served_demands, m.served_demands);
  check("transponder_count", solution.metrics.transponder_count,
        m.transponder_count);
  check("max_channel_index", solution.metrics.max_channel_index,
        m.max_channel_index);
  check("padding_slots", solution.metrics.padding_slots, m.padding_slots);
  throw InconsistencyError(out.str());
}

std::int64_t resource_cost(Layer layer, const Metrics& metrics) {
  switch (layer) {
    case Layer::kOpaque:
      return metrics.routing_cost;
    case Layer::kTransparent:
      return metrics.wavelength_cost;
    case Layer::kElastic:
      return metrics.spectrum_cost;
  }
  return metrics.routing_cost;
}

std::int64_t variable_count(const Instance& instance) {
  const ModelStats& s = instance.stats;
  std::int64_t count = 2 * std::int64_t{s.num_demands} * s.num_links;
  if (is_coded(instance.mode)) count *= s.num_nodes;
  if (instance.layer() != Layer::kOpaque) count *= s.capacity_per_link;
  return count;
}

std::string complexity_family(ProblemMode mode) {
  std::string family = "O(|D|";
  if (is_coded(mode)) family += "|V|";
  family += "|E|";
  if (layer_of(mode) == Layer::kTransparent) family += "|W|";
  if (layer_of(mode) == Layer::kElastic) family += "|S|";
  return family + ")";
}

void attach_encryption(const Instance& instance, DesignSolution& solution) {
  solution.encrypted_flows.clear();
  for (const Assignment& a : solution.assignments) {
    const Demand& d = instance.demands[instance.demand_index(a.demand_id)];
    if (!d.confidential) continue;
    const Demand* carrier = nullptr;
    for (const Assignment& other : solution.assignments) {
      const Demand& od =
          instance.demands[instance.demand_index(other.demand_id)];
      if (od.confidential || od.dst != d.dst) continue;
      if (!carrier || od.id < carrier->id) carrier = &od;
    }
    if (!carrier) continue;
    solution.encrypted_flows.push_back(
        {d.id, carrier->id, a.route.working, a.route.working.src()});
  }
}

}  // namespace ncopt
