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

// Instances shared by the unit and acceptance tests.

#ifndef NCOPT_TESTS_FIXTURES_HPP_
#define NCOPT_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ncopt/design.hpp"

namespace fixtures {

std::string data_path(const std::string& name);

// The four-node example: sources A=1 and B=2, common destination C=3,
// relay X=4; links A-C, B-C, A-X, B-X, X-C in both directions.
ncopt::Topology butterfly(int capacity = 8);
std::vector<ncopt::Demand> butterfly_demands();
// Same demands with demand 2 confidential.
std::vector<ncopt::Demand> keyed_demands();

struct Tiny {
  ncopt::Topology topology;
  std::vector<ncopt::Demand> demands;
};

// 3 to 5 nodes on a ring plus chords, at most 8 fibers, link costs 1..3,
// capacities 1..2, 1 to 3 demands that often share a destination. Rates go
// up to 2 on the elastic layer.
Tiny random_tiny(std::uint64_t seed, ncopt::Layer layer);

}  // namespace fixtures

#endif  // NCOPT_TESTS_FIXTURES_HPP_
