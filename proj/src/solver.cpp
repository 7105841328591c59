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

#include "ncopt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_map>

#include "ncopt/channels.hpp"
#include "ncopt/errors.hpp"
#include "ncopt/matching.hpp"

namespace ncopt {
namespace {

using Object = ChannelPlanner::Object;
using Clock = std::chrono::steady_clock;

constexpr int kUndecided = PartialAssignment::kUndecided;
constexpr int kUnserved = PartialAssignment::kUnserved;
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

int width_of(const Instance& instance, int d) {
  return instance.layer() == Layer::kElastic ? instance.demands[d].rate_slots
                                             : 1;
}

// Coding candidates touching demand d at candidate c.
struct CodingIndex {
  explicit CodingIndex(const Instance& instance) {
    by_choice.resize(instance.num_demands());
    for (int d = 0; d < instance.num_demands(); ++d) {
      by_choice[d].resize(instance.candidates[d].size());
    }
    for (int i = 0; i < static_cast<int>(instance.coding_candidates.size());
         ++i) {
      const CodingCandidate& cc = instance.coding_candidates[i];
      by_choice[cc.demand_a][cc.candidate_a].push_back(i);
      by_choice[cc.demand_b][cc.candidate_b].push_back(i);
    }
  }
  std::vector<std::vector<std::vector<int>>> by_choice;
};

// (partner demand, partner candidate) of coding candidate cc seen from d.
std::pair<int, int> partner_of(const CodingCandidate& cc, int d) {
  if (cc.demand_a == d) return {cc.demand_b, cc.candidate_b};
  return {cc.demand_a, cc.candidate_a};
}

// Twice the lower bound, to keep the half savings integral. With
// `may_skip` an undecided demand may also stay unserved, so its share is
// capped at zero, unless `must_serve` flags it.
std::int64_t bound2(const Instance& instance, const CodingIndex& index,
                    const std::vector<int>& choice,
                    const std::vector<int>& coding, bool may_skip = false,
                    const std::vector<char>* must_serve = nullptr) {
  const auto& ccs = instance.coding_candidates;
  std::int64_t total = 0;
  for (int d = 0; d < instance.num_demands(); ++d) {
    const int c = choice[d];
    if (c == kUnserved) continue;
    if (c >= 0) {
      const std::int64_t cost2 = 2 * instance.candidate_cost(d, c);
      if (coding[d] >= 0) {
        total += cost2 - ccs[coding[d]].saving;
        continue;
      }
      std::int64_t best = 0;
      for (int i : index.by_choice[d][c]) {
        if (choice[partner_of(ccs[i], d).first] == kUndecided) {
          best = std::max(best, ccs[i].saving);
        }
      }
      total += cost2 - best;
      continue;
    }
    if (instance.candidates[d].empty()) continue;
    std::int64_t least = kInf;
    for (int k = 0; k < static_cast<int>(instance.candidates[d].size()); ++k) {
      std::int64_t best = 0;
      for (int i : index.by_choice[d][k]) {
        auto [e, ce] = partner_of(ccs[i], d);
        if (choice[e] == kUndecided || (choice[e] == ce && coding[e] < 0)) {
          best = std::max(best, ccs[i].saving);
        }
      }
      least = std::min(least, 2 * instance.candidate_cost(d, k) - best);
    }
    const bool skip = may_skip && !(must_serve && (*must_serve)[d]);
    total += skip ? std::min<std::int64_t>(least, 0) : least;
  }
  return total;
}

// Per-link channel counts for the opaque layer, or a ChannelPlanner for the
// layers with continuity. Same update/undo contract as ChannelPlanner.
class Resources {
 public:
  explicit Resources(const Instance& instance)
      : opaque_(instance.layer() == Layer::kOpaque) {
    const Topology& topo = instance.topology;
    if (!opaque_) {
      planner_.emplace(topo);
      return;
    }
    for (int i = 0; i < topo.num_links(); ++i) {
      rows_.emplace(topo.links()[i].id, i);
      capacity_.push_back(topo.links()[i].capacity);
    }
    load_.assign(topo.num_links(), 0);
  }

  bool update(std::span<const int> remove, std::span<const Object> add,
              std::vector<int>* added) {
    if (planner_) return planner_->update(remove, add, added);
    for (int h : remove) apply(objects_[h], -1);
    bool ok = true;
    for (const Object& o : add) {
      apply(o, +1);
      for (LinkId id : o.links) {
        const int row = rows_.at(id);
        if (load_[row] > capacity_[row]) ok = false;
      }
    }
    if (!ok) {
      for (const Object& o : add) apply(o, -1);
      for (int h : remove) apply(objects_[h], +1);
      return false;
    }
    history_.push_back({std::vector<int>(remove.begin(), remove.end()),
                        static_cast<int>(add.size())});
    for (const Object& o : add) {
      objects_.push_back(o);
      if (added) added->push_back(static_cast<int>(objects_.size()) - 1);
    }
    return true;
  }

  void undo() {
    if (planner_) {
      planner_->undo();
      return;
    }
    auto [removed, count] = std::move(history_.back());
    history_.pop_back();
    for (int i = 0; i < count; ++i) {
      apply(objects_.back(), -1);
      objects_.pop_back();
    }
    for (int h : removed) apply(objects_[h], +1);
  }

  bool load_allows(std::span<const int> remove,
                   std::span<const Object> add) const {
    if (planner_) return planner_->load_allows(remove, add);
    std::unordered_map<int, int> delta;
    for (int h : remove) {
      for (LinkId id : objects_[h].links)
        delta[rows_.at(id)] -= objects_[h].width;
    }
    for (const Object& o : add) {
      for (LinkId id : o.links) delta[rows_.at(id)] += o.width;
    }
    for (const auto& [row, d] : delta) {
      if (load_[row] + d > capacity_[row]) return false;
    }
    return true;
  }

  std::optional<Channel> channel(int h) const {
    if (!planner_) return std::nullopt;
    return Channel{planner_->start(h), planner_->object(h).width};
  }

 private:
  void apply(const Object& o, int sign) {
    for (LinkId id : o.links) load_[rows_.at(id)] += sign * o.width;
  }

  bool opaque_;
  std::optional<ChannelPlanner> planner_;
  std::unordered_map<LinkId, int> rows_;
  std::vector<int> capacity_;
  std::vector<int> load_;
  std::vector<Object> objects_;
  std::vector<std::pair<std::vector<int>, int>> history_;
};

// Routing decisions plus the channel objects they occupy, with undo.
class State {
 public:
  explicit State(const Instance& instance)
      : instance_(instance),
        resources_(instance),
        choice_(instance.num_demands(), kUndecided),
        coding_(instance.num_demands(), -1),
        work_(instance.num_demands(), -1),
        prot_(instance.num_demands(), -1) {}

  const std::vector<int>& choice() const { return choice_; }
  const std::vector<int>& coding() const { return coding_; }
  std::int64_t served_rate() const { return served_rate_; }

  bool serve(int d, int c) {
    const PathPair& pair = instance_.candidates[d][c];
    std::vector<Object> add{{pair.working.links, width_of(instance_, d)}};
    if (pair.has_protection()) {
      add.push_back({pair.protection.links, width_of(instance_, d)});
    }
    std::vector<int> handles;
    if (!resources_.update({}, add, &handles)) return false;
    begin_frame(true, {d});
    set(d, c, -1, handles[0], handles.size() > 1 ? handles[1] : -1);
    return true;
  }

  // Serves d on candidate c coded with its already served partner.
  bool serve_coded(int d, int c, int cc) {
    const int e = partner_of(instance_.coding_candidates[cc], d).first;
    const int remove[] = {prot_[e]};
    const Object add[] = {
        {instance_.candidates[d][c].working.links, width_of(instance_, d)},
        group_object(cc)};
    std::vector<int> handles;
    if (!resources_.update(remove, add, &handles)) return false;
    begin_frame(true, {d, e});
    set(d, c, cc, handles[0], handles[1]);
    coding_[e] = cc;
    prot_[e] = handles[1];
    return true;
  }

  // Moves two served, uncoded demands onto coding candidate cc.
  bool recode(int cc) {
    const CodingCandidate& x = instance_.coding_candidates[cc];
    const int a = x.demand_a;
    const int b = x.demand_b;
    const int remove[] = {work_[a], prot_[a], work_[b], prot_[b]};
    const Object add[] = {{instance_.candidates[a][x.candidate_a].working.links,
                           width_of(instance_, a)},
                          {instance_.candidates[b][x.candidate_b].working.links,
                           width_of(instance_, b)},
                          group_object(cc)};
    std::vector<int> handles;
    if (!resources_.update(remove, add, &handles)) return false;
    begin_frame(true, {a, b});
    set(a, x.candidate_a, cc, handles[0], handles[2]);
    set(b, x.candidate_b, cc, handles[1], handles[2]);
    return true;
  }

  // False when no option for undecided demand d fits the per-link loads.
  // Later states only add load (a coded group covers the protection it
  // replaces), so such a demand stays unservable in every completion.
  bool could_serve(int d, const CodingIndex& index) const {
    const auto& ccs = instance_.coding_candidates;
    for (int c = 0; c < static_cast<int>(instance_.candidates[d].size()); ++c) {
      const PathPair& pair = instance_.candidates[d][c];
      const Object work{pair.working.links, width_of(instance_, d)};
      std::vector<Object> add{work};
      if (pair.has_protection()) {
        add.push_back({pair.protection.links, width_of(instance_, d)});
      }
      if (resources_.load_allows({}, add)) return true;
      for (int i : index.by_choice[d][c]) {
        auto [e, ce] = partner_of(ccs[i], d);
        if (choice_[e] != ce || coding_[e] >= 0) continue;
        const int remove[] = {prot_[e]};
        const Object coded[] = {work, group_object(i)};
        if (resources_.load_allows(remove, coded)) return true;
      }
    }
    return false;
  }

  void skip(int d) {
    begin_frame(false, {d});
    choice_[d] = kUnserved;
  }

  void undo() {
    Frame frame = std::move(frames_.back());
    frames_.pop_back();
    if (frame.resources) resources_.undo();
    for (const Saved& s : frame.saved) {
      choice_[s.d] = s.choice;
      coding_[s.d] = s.coding;
      work_[s.d] = s.work;
      prot_[s.d] = s.prot;
    }
    served_rate_ = frame.served_rate;
  }

  DesignSolution solution() const {
    DesignSolution s;
    for (int d = 0; d < instance_.num_demands(); ++d) {
      if (choice_[d] < 0) continue;
      Assignment a;
      a.demand_id = instance_.demands[d].id;
      a.route = instance_.candidates[d][choice_[d]];
      a.working_channel = resources_.channel(work_[d]);
      if (prot_[d] >= 0) a.protection_channel = resources_.channel(prot_[d]);
      s.assignments.push_back(std::move(a));
      if (coding_[d] >= 0 &&
          instance_.coding_candidates[coding_[d]].demand_a == d) {
        s.coding_groups.push_back(
            instance_.coding_candidates[coding_[d]].group);
      }
    }
    std::sort(s.assignments.begin(), s.assignments.end(),
              [](const Assignment& x, const Assignment& y) {
                return x.demand_id < y.demand_id;
              });
    std::sort(s.coding_groups.begin(), s.coding_groups.end(),
              [](const CodingGroup& x, const CodingGroup& y) {
                return std::pair(x.demand_a, x.demand_b) <
                       std::pair(y.demand_a, y.demand_b);
              });
    attach_encryption(instance_, s);
    s.metrics = compute_metrics(instance_, s);
    return s;
  }

 private:
  struct Saved {
    int d, choice, coding, work, prot;
  };
  struct Frame {
    bool resources = false;
    std::vector<Saved> saved;
    std::int64_t served_rate = 0;
  };

  Object group_object(int cc) const {
    const CodingCandidate& x = instance_.coding_candidates[cc];
    Object o;
    o.links = x.group.branch_a.links;
    o.links.insert(o.links.end(), x.group.branch_b.links.begin(),
                   x.group.branch_b.links.end());
    o.links.insert(o.links.end(), x.group.encoded_segment.links.begin(),
                   x.group.encoded_segment.links.end());
    o.width = std::max(width_of(instance_, x.demand_a),
                       width_of(instance_, x.demand_b));
    return o;
  }

  void begin_frame(bool resources, std::initializer_list<int> demands) {
    Frame frame;
    frame.resources = resources;
    frame.served_rate = served_rate_;
    for (int d : demands) {
      frame.saved.push_back({d, choice_[d], coding_[d], work_[d], prot_[d]});
    }
    frames_.push_back(std::move(frame));
  }

  void set(int d, int c, int cc, int work, int prot) {
    if (choice_[d] < 0) served_rate_ += instance_.demands[d].rate_slots;
    choice_[d] = c;
    coding_[d] = cc;
    work_[d] = work;
    prot_[d] = prot;
  }

  const Instance& instance_;
  Resources resources_;
  std::vector<int> choice_;
  std::vector<int> coding_;
  std::vector<int> work_;
  std::vector<int> prot_;
  std::int64_t served_rate_ = 0;
  std::vector<Frame> frames_;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const SolverBudget& budget,
                 bool first_only)
      : instance_(instance),
        index_(instance),
        budget_(budget),
        first_only_(first_only),
        throughput_(instance.objective == Objective::kMaxThroughput),
        state_(instance) {
    const int n = instance.num_demands();
    std::vector<std::int64_t> cheapest(n, -1);
    for (int d = 0; d < n; ++d) {
      if (!instance.candidates[d].empty()) {
        cheapest[d] = instance.candidate_cost(d, 0);
      }
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return cheapest[a] > cheapest[b]; });
    remaining_rate_.assign(n + 1, 0);
    must_serve_.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
      const int d = order_[i];
      remaining_rate_[i] =
          remaining_rate_[i + 1] +
          (instance.candidates[d].empty() ? 0 : instance.demands[d].rate_slots);
    }
  }

  void seed(const DesignSolution& solution) {
    best_ = solution;
    best_served_ = solution.metrics.served_rate;
    best_cost_ = resource_cost(instance_.layer(), solution.metrics);
  }

  // Returns true when the search ran to completion.
  bool run() {
    start_ = Clock::now();
    root_bound2_ = bound2(instance_, index_, state_.choice(), state_.coding());
    dfs(0);
    return !stopped_;
  }

  State& state() { return state_; }
  const std::optional<DesignSolution>& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }
  std::int64_t root_bound2() const { return root_bound2_; }
  std::int64_t total_servable() const { return remaining_rate_[0]; }

 private:
  bool better(std::int64_t served, std::int64_t cost) const {
    if (!best_) return true;
    if (throughput_ && served != best_served_) return served > best_served_;
    return cost < best_cost_;
  }

  // Served rate plus every remaining demand that still fits somewhere.
  // Marks those demands in must_serve_: a completion that only ties the
  // bound has to serve all of them.
  std::int64_t upper_bound(std::size_t pos) {
    std::int64_t ub = state_.served_rate();
    const bool all = ub + remaining_rate_[pos] <= best_served_;
    for (std::size_t i = pos; i < order_.size(); ++i) {
      const int d = order_[i];
      must_serve_[d] = !instance_.candidates[d].empty() &&
                       (all || state_.could_serve(d, index_));
      if (must_serve_[d]) ub += instance_.demands[d].rate_slots;
    }
    return ub;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 255) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() >
            budget_.time_limit_seconds) {
      return true;
    }
    return false;
  }

  // Applies one option; returns true to stop the whole search with the
  // state left in place (first_only mode).
  bool descend(std::size_t pos) {
    if (nodes_ >= budget_.max_nodes) {
      stopped_ = true;
      state_.undo();
      return false;
    }
    ++nodes_;
    const bool stop = dfs(pos + 1);
    if (!stop) state_.undo();
    return stop;
  }

  bool dfs(std::size_t pos) {
    if (stopped_) return false;
    const std::int64_t lb2 = bound2(instance_, index_, state_.choice(),
                                    state_.coding(), throughput_);
    if (pos == order_.size()) {
      const std::int64_t cost = lb2 / 2;
      if (better(state_.served_rate(), cost)) {
        best_ = state_.solution();
        best_served_ = state_.served_rate();
        best_cost_ = cost;
      }
      return first_only_;
    }
    if (best_ && !first_only_) {
      if (throughput_) {
        const std::int64_t ub = upper_bound(pos);
        if (ub < best_served_) return false;
        if (ub == best_served_ &&
            bound2(instance_, index_, state_.choice(), state_.coding(), true,
                   &must_serve_) >= 2 * best_cost_) {
          return false;
        }
      } else if (lb2 >= 2 * best_cost_) {
        return false;
      }
    }
    if (out_of_budget()) {
      stopped_ = true;
      return false;
    }

    const int d = order_[pos];
    const auto& ccs = instance_.coding_candidates;
    const std::vector<int>& choice = state_.choice();
    const std::vector<int>& coding = state_.coding();
    for (int c = 0; c < static_cast<int>(instance_.candidates[d].size()); ++c) {
      std::vector<int> coded;
      for (int i : index_.by_choice[d][c]) {
        auto [e, ce] = partner_of(ccs[i], d);
        if (choice[e] == ce && coding[e] < 0) coded.push_back(i);
      }
      std::stable_sort(coded.begin(), coded.end(), [&](int x, int y) {
        return ccs[x].saving > ccs[y].saving;
      });
      for (int i : coded) {
        if (state_.serve_coded(d, c, i) && descend(pos)) return true;
        if (stopped_) return false;
      }
      if (state_.serve(d, c) && descend(pos)) return true;
      if (stopped_) return false;
    }
    if (throughput_) {
      state_.skip(d);
      if (descend(pos)) return true;
    }
    return false;
  }

  const Instance& instance_;
  CodingIndex index_;
  SolverBudget budget_;
  bool first_only_;
  bool throughput_;
  State state_;
  std::vector<int> order_;
  std::vector<std::int64_t> remaining_rate_;
  std::vector<char> must_serve_;
  std::optional<DesignSolution> best_;
  std::int64_t best_served_ = 0;
  std::int64_t best_cost_ = kInf;
  std::int64_t nodes_ = 0;
  std::int64_t root_bound2_ = 0;
  bool stopped_ = false;
  Clock::time_point start_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t current_cost(const Instance& instance, const State& state, int d) {
  return instance.candidate_cost(d, state.choice()[d]);
}

}  // namespace

PartialAssignment PartialAssignment::empty(const Instance& instance) {
  PartialAssignment p;
  p.choice.assign(instance.num_demands(), kUndecided);
  p.coding.assign(instance.num_demands(), -1);
  return p;
}

double lower_bound(const Instance& instance, const PartialAssignment& partial) {
  const CodingIndex index(instance);
  return static_cast<double>(
             bound2(instance, index, partial.choice, partial.coding)) /
         2.0;
}

namespace {

// solve_greedy with a node budget for the first-feasible fallback.
SolveReport greedy(const Instance& instance, std::uint64_t seed,
                   std::int64_t max_nodes) {
  const auto start = Clock::now();
  const int n = instance.num_demands();
  const bool throughput = instance.objective == Objective::kMaxThroughput;
  SolveReport report;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  // (1) Sequential cheapest feasible candidate.
  auto own = std::make_unique<State>(instance);
  std::unique_ptr<BranchAndBound> fallback;
  State* state = own.get();
  for (int d : order) {
    bool served = false;
    for (int c = 0;
         c < static_cast<int>(instance.candidates[d].size()) && !served; ++c) {
      served = state->serve(d, c);
    }
    if (served) continue;
    if (throughput) {
      state->skip(d);
      continue;
    }
    // Sequential routing got stuck; any feasible design will do as a start.
    SolverBudget limit;
    limit.max_nodes = max_nodes;
    fallback = std::make_unique<BranchAndBound>(instance, limit, true);
    const bool complete = fallback->run();
    if (!fallback->best()) {
      if (complete) {
        throw InfeasibleError("no feasible design serves every demand");
      }
      throw BudgetError("node budget exhausted before a feasible design");
    }
    report.nodes_explored = fallback->nodes();
    state = &fallback->state();
    break;
  }

  // (2) Net saving of the best codable combination per demand pair.
  std::map<std::pair<int, int>, std::pair<std::int64_t, int>> best;
  const auto& ccs = instance.coding_candidates;
  for (int i = 0; i < static_cast<int>(ccs.size()); ++i) {
    const CodingCandidate& x = ccs[i];
    const auto& choice = state->choice();
    const auto& coding = state->coding();
    if (choice[x.demand_a] < 0 || choice[x.demand_b] < 0) continue;
    if (coding[x.demand_a] >= 0 || coding[x.demand_b] >= 0) continue;
    const std::int64_t now = current_cost(instance, *state, x.demand_a) +
                             current_cost(instance, *state, x.demand_b);
    const std::int64_t after =
        instance.candidate_cost(x.demand_a, x.candidate_a) +
        instance.candidate_cost(x.demand_b, x.candidate_b) - x.saving;
    const std::int64_t gain = now - after;
    if (gain <= 0) continue;
    auto [it, inserted] =
        best.emplace(std::pair(x.demand_a, x.demand_b), std::pair(gain, i));
    if (!inserted && gain > it->second.first) it->second = {gain, i};
  }

  // (3) Maximum weight matching over demands.
  std::vector<WeightedEdge> edges;
  for (const auto& [key, value] : best) {
    edges.push_back({key.first, key.second, value.first});
  }
  const std::vector<int> mate = max_weight_matching(n, edges);

  // (4) Apply matched pairs, heaviest first; keep the old routing for pairs
  // whose channels no longer fit.
  std::vector<std::pair<std::int64_t, int>> chosen;
  for (const auto& [key, value] : best) {
    if (mate[key.first] == key.second)
      chosen.push_back({value.first, value.second});
  }
  std::stable_sort(
      chosen.begin(), chosen.end(),
      [](const auto& x, const auto& y) { return x.first > y.first; });
  for (const auto& [gain, i] : chosen) state->recode(i);

  // (5) Freed capacity may now fit demands skipped earlier.
  if (throughput) {
    for (int d : order) {
      if (state->choice()[d] >= 0) continue;
      for (int c = 0; c < static_cast<int>(instance.candidates[d].size());
           ++c) {
        if (state->serve(d, c)) break;
      }
    }
  }

  report.solution = state->solution();
  report.has_solution = true;
  report.proved_optimal = false;
  report.solution.proved_optimal = false;
  const PartialAssignment root = PartialAssignment::empty(instance);
  if (throughput) {
    std::int64_t servable = 0;
    for (int d = 0; d < n; ++d) {
      if (!instance.candidates[d].empty())
        servable += instance.demands[d].rate_slots;
    }
    report.best_bound = static_cast<double>(servable);
  } else {
    report.best_bound = lower_bound(instance, root);
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

}  // namespace

SolveReport solve_greedy(const Instance& instance, std::uint64_t seed) {
  return greedy(instance, seed, SolverBudget{}.max_nodes);
}

SolveReport solve_exact(const Instance& instance, const SolverBudget& budget) {
  const auto start = Clock::now();
  const bool throughput = instance.objective == Objective::kMaxThroughput;
  std::optional<DesignSolution> incumbent;
  std::int64_t greedy_nodes = 0;
  try {
    SolveReport first = greedy(instance, budget.seed, budget.max_nodes);
    greedy_nodes = first.nodes_explored;
    incumbent = std::move(first.solution);
  } catch (const InfeasibleError&) {
    // The search below will confirm it or find a design.
  } catch (const BudgetError&) {
    greedy_nodes = budget.max_nodes;
  }
  SolverBudget rest = budget;
  rest.max_nodes = std::max<std::int64_t>(0, budget.max_nodes - greedy_nodes);
  BranchAndBound search(instance, rest, false);
  if (incumbent) search.seed(*incumbent);
  const bool complete = search.run();

  SolveReport report;
  report.nodes_explored = search.nodes() + greedy_nodes;
  report.wall_time_seconds = seconds_since(start);
  if (!search.best()) {
    if (complete) {
      throw InfeasibleError("no feasible design serves every demand");
    }
    report.best_bound = static_cast<double>(search.root_bound2()) / 2.0;
    return report;
  }
  report.solution = *search.best();
  report.has_solution = true;
  report.proved_optimal = complete;
  report.solution.proved_optimal = complete;
  if (complete) {
    report.best_bound =
        throughput ? static_cast<double>(report.solution.metrics.served_rate)
                   : static_cast<double>(resource_cost(
                         instance.layer(), report.solution.metrics));
  } else if (throughput) {
    report.best_bound = static_cast<double>(search.total_servable());
  } else {
    report.best_bound = static_cast<double>(search.root_bound2()) / 2.0;
  }
  return report;
}

}  // namespace ncopt
