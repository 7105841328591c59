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

// Pairing of protection flows for XOR coding, and XOR encryption of a
// confidential demand with a complementary carrier signal.

#ifndef NCOPT_CODING_HPP_
#define NCOPT_CODING_HPP_

#include <optional>

#include "ncopt/bitstream.hpp"
#include "ncopt/pathing.hpp"

namespace ncopt {

// Two protected demands to the same destination whose protection routes
// merge at `coding_node`. From there to the destination a single channel
// carries the XOR of both protection signals.
//
// branch_a + encoded_segment is demand_a's protection route (likewise b).
// A branch is a zero-link stub when the coding node is that demand's source.
struct CodingGroup {
  int demand_a = 0;
  int demand_b = 0;
  NodeId coding_node = 0;
  Path encoded_segment;
  Path branch_a;
  Path branch_b;

  friend bool operator==(const CodingGroup&, const CodingGroup&) = default;
};

// Returns the group iff the two pairs can share an encoded segment and every
// single fiber cut stays recoverable:
//   c1 same destination;
//   c2 the protection routes share a suffix of at least one link; the
//      longest one is the encoded segment, its first node the coding node;
//   c3 the working paths are fiber-disjoint from each other;
//   c4 the encoded segment is fiber-disjoint from both working paths;
//   c5 each protection route is fiber-disjoint from its own working path;
//   c6 each branch is fiber-disjoint from the other demand's working path.
// Without c6 one cut could take out working_a and branch_b together, leaving
// no intact encoded stream to decode A from. The two branches may share
// fibers with each other.
std::optional<CodingGroup> codable(const Topology& topology, int demand_a,
                                   const PathPair& pair_a, int demand_b,
                                   const PathPair& pair_b);

// Demand ids left at 0.
std::optional<CodingGroup> codable(const Topology& topology,
                                   const PathPair& pair_a,
                                   const PathPair& pair_b);

// The confidential demand's signal is XORed with the carrier's signal at
// `encoding_node` and travels as ciphertext along `shared_route` (its
// working path). The carrier's signal, delivered to the same destination,
// is the key stream. Links before `encoding_node` carry plaintext, so a
// valid flow encodes at the route's source.
struct EncryptedFlow {
  int confidential_demand = 0;
  int carrier_demand = 0;
  Path shared_route;
  NodeId encoding_node = 0;

  friend bool operator==(const EncryptedFlow&, const EncryptedFlow&) = default;
};

}  // namespace ncopt

#endif  // NCOPT_CODING_HPP_
