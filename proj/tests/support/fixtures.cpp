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

#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace fixtures {

std::string data_path(const std::string& name) {
  return std::string(NCOPT_DATA_DIR) + "/" + name;
}

ncopt::Topology butterfly(int capacity) {
  return ncopt::load_topology_file(data_path("butterfly.topo"))
      .with_capacity(capacity);
}

std::vector<ncopt::Demand> butterfly_demands() {
  return {{1, 1, 3, 1, true, false}, {2, 2, 3, 1, true, false}};
}

std::vector<ncopt::Demand> keyed_demands() {
  return {{1, 1, 3, 1, true, false}, {2, 2, 3, 1, true, true}};
}

Tiny random_tiny(std::uint64_t seed, ncopt::Layer layer) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int n = uniform(3, 5);
  std::set<std::pair<int, int>> fibers;
  for (int i = 1; i <= n; ++i) {
    const int j = i % n + 1;
    fibers.insert({std::min(i, j), std::max(i, j)});
  }
  const int target = std::min(8, n * (n - 1) / 2);
  const int extra = uniform(0, target - static_cast<int>(fibers.size()));
  for (int tries = 0; tries < 50 && static_cast<int>(fibers.size()) < n + extra;
       ++tries) {
    int a = uniform(1, n), b = uniform(1, n);
    if (a == b) continue;
    fibers.insert({std::min(a, b), std::max(a, b)});
  }
  const bool uniform_cap = uniform(0, 1) == 0;
  const int cap = uniform(1, 2);
  std::vector<ncopt::Link> links;
  int id = 1;
  for (auto [u, v] : fibers) {
    const int cost = uniform(1, 3);
    const int c1 = uniform_cap ? cap : uniform(1, 2);
    const int c2 = uniform_cap ? cap : uniform(1, 2);
    links.push_back({id++, u, v, cost, c1});
    links.push_back({id++, v, u, cost, c2});
  }
  std::vector<int> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = i + 1;
  const auto tech = layer == ncopt::Layer::kElastic ? ncopt::Technology::kEon
                                                    : ncopt::Technology::kWdm;
  Tiny t{ncopt::Topology("tiny" + std::to_string(seed), tech, nodes, links),
         {}};
  const int count = uniform(1, 3);
  const int shared_dst = uniform(1, n);
  for (int d = 1; d <= count; ++d) {
    ncopt::Demand dem;
    dem.id = d;
    dem.dst = uniform(0, 9) < 7 ? shared_dst : uniform(1, n);
    do {
      dem.src = uniform(1, n);
    } while (dem.src == dem.dst);
    dem.rate_slots = layer == ncopt::Layer::kElastic ? uniform(1, 2) : 1;
    dem.is_protected = uniform(0, 9) < 9;
    t.demands.push_back(dem);
  }
  return t;
}

}  // namespace fixtures
