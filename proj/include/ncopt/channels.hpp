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

#ifndef NCOPT_CHANNELS_HPP_
#define NCOPT_CHANNELS_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ncopt/topology.hpp"

namespace ncopt {

// Keeps a set of channel objects (lightpaths or merged coded protections)
// placed on wavelength indices / slot intervals so that no two objects
// overlap on a directed link and every object uses the same start on all of
// its links. Feasibility is exact: when first-fit placement of new objects
// fails, the whole set is re-placed by backtracking search.
class ChannelPlanner {
 public:
  using Handle = int;

  struct Object {
    // Directed link ids; a repeated link makes the object infeasible.
    std::vector<LinkId> links;
    int width = 1;
  };

  explicit ChannelPlanner(const Topology& topology);

  // Removes `remove`, adds `add`, and re-places if needed. On success the
  // new handles are appended to `added` and the change can be reverted with
  // undo(). On failure nothing changes.
  bool update(std::span<const Handle> remove, std::span<const Object> add,
              std::vector<Handle>* added = nullptr);
  // Reverts the most recent successful update(). Handles it added become
  // invalid and are reused.
  void undo();

  // Necessary condition for update(remove, add): per-link totals stay within
  // capacity. Changes nothing.
  bool load_allows(std::span<const Handle> remove,
                   std::span<const Object> add) const;

  int start(Handle handle) const { return starts_[handle]; }
  bool active(Handle handle) const { return active_[handle]; }
  const Object& object(Handle handle) const { return objects_[handle]; }

  // Number of full re-placement searches run so far.
  std::int64_t full_searches() const { return full_searches_; }

 private:
  struct Placed {
    std::vector<int> link_rows;
    int width = 1;
    int max_start = -1;  // < 0: fits nowhere
  };
  struct Step {
    std::vector<Handle> removed;
    std::vector<Handle> added;
    // Only kept when the step re-placed everything.
    std::vector<int> previous_starts;
    bool full = false;
  };

  bool fits(const Placed& p, int start) const;
  void mark(const Placed& p, int start, bool on);
  bool place_first_fit(Handle h);
  int count_starts(const Placed& p, int limit) const;
  bool search_all(std::vector<Handle> order);
  void rebuild_occupancy();

  const Topology& topology_;
  bool symmetric_ = false;
  std::unordered_map<LinkId, int> rows_;
  int words_ = 1;
  // Row per link, `words_` 64-bit words per row.
  std::vector<std::uint64_t> occupancy_;
  // Sum of active widths per row, and the row's capacity.
  std::vector<int> load_;
  std::vector<int> capacity_;
  std::vector<Object> objects_;
  std::vector<Placed> placed_;
  std::vector<int> starts_;
  std::vector<char> active_;
  std::vector<Step> history_;
  std::int64_t full_searches_ = 0;
};

}  // namespace ncopt

#endif  // NCOPT_CHANNELS_HPP_
