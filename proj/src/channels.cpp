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

#include "ncopt/channels.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace ncopt {
namespace {

std::unordered_map<LinkId, int> link_rows(const Topology& topology) {
  std::unordered_map<LinkId, int> rows;
  for (int i = 0; i < topology.num_links(); ++i) {
    rows.emplace(topology.links()[i].id, i);
  }
  return rows;
}

}  // namespace

ChannelPlanner::ChannelPlanner(const Topology& topology)
    : topology_(topology),
      symmetric_(topology.uniform_capacity()),
      rows_(link_rows(topology)),
      words_(std::max(1, (topology.max_capacity() + 63) / 64)),
      occupancy_(static_cast<std::size_t>(topology.num_links()) * words_, 0),
      load_(topology.num_links(), 0) {
  for (const Link& l : topology.links()) capacity_.push_back(l.capacity);
}

bool ChannelPlanner::fits(const Placed& p, int start) const {
  for (int row : p.link_rows) {
    const std::uint64_t* bits = &occupancy_[std::size_t(row) * words_];
    for (int s = start; s < start + p.width; ++s) {
      if ((bits[s / 64] >> (s % 64)) & 1U) return false;
    }
  }
  return true;
}

void ChannelPlanner::mark(const Placed& p, int start, bool on) {
  for (int row : p.link_rows) {
    std::uint64_t* bits = &occupancy_[std::size_t(row) * words_];
    for (int s = start; s < start + p.width; ++s) {
      const std::uint64_t bit = std::uint64_t{1} << (s % 64);
      if (on) {
        bits[s / 64] |= bit;
      } else {
        bits[s / 64] &= ~bit;
      }
    }
  }
}

bool ChannelPlanner::place_first_fit(Handle h) {
  const Placed& p = placed_[h];
  for (int s = 0; s <= p.max_start; ++s) {
    if (fits(p, s)) {
      mark(p, s, true);
      starts_[h] = s;
      return true;
    }
  }
  return false;
}

void ChannelPlanner::rebuild_occupancy() {
  std::fill(occupancy_.begin(), occupancy_.end(), 0);
  for (Handle h = 0; h < static_cast<Handle>(objects_.size()); ++h) {
    if (active_[h] && starts_[h] >= 0) mark(placed_[h], starts_[h], true);
  }
}

int ChannelPlanner::count_starts(const Placed& p, int limit) const {
  int n = 0;
  for (int s = 0; s <= limit; ++s) n += fits(p, s) ? 1 : 0;
  return n;
}

bool ChannelPlanner::search_all(std::vector<Handle> order) {
  ++full_searches_;
  std::fill(occupancy_.begin(), occupancy_.end(), 0);
  // Wavelengths are interchangeable when every link has the same count, so
  // a new index never needs to skip past the next unused one.
  const bool unit = std::all_of(order.begin(), order.end(), [&](Handle h) {
    return placed_[h].width == 1;
  });
  const bool break_symmetry = symmetric_ && unit;
  std::vector<int> chosen(order.size(), -1);

  // Most constrained object first; an object with no start left fails the
  // branch immediately.
  auto place = [&](auto&& self, std::size_t count, int highest) -> bool {
    if (count == order.size()) return true;
    int best = -1;
    int best_options = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (chosen[i] >= 0) continue;
      const Placed& p = placed_[order[i]];
      int limit = p.max_start;
      if (break_symmetry) limit = std::min(limit, highest + 1);
      const int options = count_starts(p, limit);
      if (options == 0) return false;
      if (best < 0 || options < best_options) {
        best = static_cast<int>(i);
        best_options = options;
      }
    }
    const Placed& p = placed_[order[best]];
    int limit = p.max_start;
    if (break_symmetry) limit = std::min(limit, highest + 1);
    for (int s = 0; s <= limit; ++s) {
      if (!fits(p, s)) continue;
      mark(p, s, true);
      chosen[best] = s;
      if (self(self, count + 1, std::max(highest, s))) return true;
      chosen[best] = -1;
      mark(p, s, false);
    }
    return false;
  };
  if (!place(place, 0, -1)) return false;
  for (std::size_t i = 0; i < order.size(); ++i) starts_[order[i]] = chosen[i];
  return true;
}

bool ChannelPlanner::update(std::span<const Handle> remove,
                            std::span<const Object> add,
                            std::vector<Handle>* added) {
  Step step;
  step.previous_starts = starts_;
  for (Handle h : remove) {
    mark(placed_[h], starts_[h], false);
    active_[h] = 0;
    step.removed.push_back(h);
  }
  for (const Object& o : add) {
    Placed p;
    p.width = o.width;
    int capacity = std::numeric_limits<int>::max();
    for (LinkId id : o.links) {
      p.link_rows.push_back(rows_.at(id));
      capacity = std::min(capacity, topology_.link(id).capacity);
    }
    p.max_start = o.links.empty() ? -1 : capacity - o.width;
    // A repeated link can never be placed; marking would hide the clash.
    std::vector<int> sorted_rows = p.link_rows;
    std::sort(sorted_rows.begin(), sorted_rows.end());
    if (std::adjacent_find(sorted_rows.begin(), sorted_rows.end()) !=
        sorted_rows.end()) {
      p.max_start = -1;
    }
    objects_.push_back(o);
    placed_.push_back(std::move(p));
    starts_.push_back(-1);
    active_.push_back(1);
    step.added.push_back(static_cast<Handle>(objects_.size()) - 1);
  }

  bool ok = true;
  bool full = false;
  for (Handle h : step.removed) {
    for (int row : placed_[h].link_rows) load_[row] -= placed_[h].width;
  }
  for (Handle h : step.added) {
    for (int row : placed_[h].link_rows) load_[row] += placed_[h].width;
  }
  // Per-link totals over capacity rule out any placement.
  bool overloaded = false;
  for (Handle h : step.added) {
    for (int row : placed_[h].link_rows) {
      if (load_[row] > capacity_[row]) overloaded = true;
    }
  }
  for (Handle h : step.added) {
    if (overloaded || !place_first_fit(h)) {
      ok = false;
      break;
    }
  }
  if (!ok && !overloaded) {
    std::vector<Handle> all;
    for (Handle h = 0; h < static_cast<Handle>(objects_.size()); ++h) {
      if (active_[h]) all.push_back(h);
    }
    full = true;
    ok = search_all(std::move(all));
  }
  if (!ok) {
    for (Handle h : step.added) {
      for (int row : placed_[h].link_rows) load_[row] -= placed_[h].width;
    }
    for (Handle h : step.removed) {
      for (int row : placed_[h].link_rows) load_[row] += placed_[h].width;
    }
    for (std::size_t i = 0; i < step.added.size(); ++i) {
      objects_.pop_back();
      placed_.pop_back();
      starts_.pop_back();
      active_.pop_back();
    }
    for (Handle h : step.removed) active_[h] = 1;
    starts_ = std::move(step.previous_starts);
    rebuild_occupancy();
    return false;
  }
  if (added) {
    added->insert(added->end(), step.added.begin(), step.added.end());
  }
  step.full = full;
  if (!full) step.previous_starts.clear();
  history_.push_back(std::move(step));
  return true;
}

bool ChannelPlanner::load_allows(std::span<const Handle> remove,
                                 std::span<const Object> add) const {
  std::unordered_map<int, int> delta;
  for (Handle h : remove) {
    for (int row : placed_[h].link_rows) delta[row] -= placed_[h].width;
  }
  for (const Object& o : add) {
    for (LinkId id : o.links) delta[rows_.at(id)] += o.width;
  }
  for (const auto& [row, d] : delta) {
    if (load_[row] + d > capacity_[row]) return false;
  }
  return true;
}

void ChannelPlanner::undo() {
  Step step = std::move(history_.back());
  history_.pop_back();
  const bool full = step.full;
  for (Handle h : step.added) {
    for (int row : placed_[h].link_rows) load_[row] -= placed_[h].width;
  }
  for (Handle h : step.removed) {
    for (int row : placed_[h].link_rows) load_[row] += placed_[h].width;
  }
  if (!full) {
    for (auto it = step.added.rbegin(); it != step.added.rend(); ++it) {
      mark(placed_[*it], starts_[*it], false);
    }
  }
  for (std::size_t i = 0; i < step.added.size(); ++i) {
    objects_.pop_back();
    placed_.pop_back();
    starts_.pop_back();
    active_.pop_back();
  }
  for (Handle h : step.removed) {
    active_[h] = 1;
    if (!full) mark(placed_[h], starts_[h], true);
  }
  if (full) {
    starts_ = std::move(step.previous_starts);
    rebuild_occupancy();
  }
}

}  // namespace ncopt
