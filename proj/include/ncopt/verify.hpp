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

// Independent audit of a design: constraint checks that do not trust the
// solver, a bit-level single-fiber-cut simulation, and encryption checks.

#ifndef NCOPT_VERIFY_HPP_
#define NCOPT_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncopt/bitstream.hpp"
#include "ncopt/design.hpp"

namespace ncopt {

struct Violation {
  // Short rule name: "route", "disjointness", "capacity", "overlap",
  // "continuity", "coding", "coverage", "metrics" or "encryption".
  std::string rule;
  std::string detail;
};

// Empty iff every constraint holds.
std::vector<Violation> validate_solution(const Instance& instance,
                                         const DesignSolution& solution);

enum class Outcome {
  kDeliveredDirect,
  kRecoveredByProtection,
  kRecoveredByDecode,
  kLost,
};

std::string_view to_string(Outcome outcome);
std::optional<Outcome> parse_outcome(std::string_view text);

struct DemandOutcome {
  int demand_id = 0;
  Outcome outcome = Outcome::kLost;
  // Plaintext delivered to the destination; empty when lost.
  BitStream recovered;
  // Set for kRecoveredByDecode: the surviving working stream and the
  // encoded stream fed to decode_lost.
  std::optional<BitStream> decode_surviving;
  std::optional<BitStream> decode_encoded;
};

struct RecoveryTrace {
  EdgeId failed_edge = 0;
  // One entry per served demand, by demand id.
  std::vector<DemandOutcome> outcomes;
};

// Seeded random stream of `length` bits per demand id.
std::map<int, BitStream> random_payloads(const Instance& instance,
                                         std::uint64_t seed,
                                         std::size_t length = 256);

// Cuts one fiber and pushes the payloads through every lightpath: signals
// crossing the cut are gone, coding nodes XOR what their branches deliver,
// destinations fall back to protection or to decode_lost. Confidential
// demands travel as ciphertext keyed by their carrier's payload and are
// decrypted with whatever the destination recovered for the carrier.
// Throws InconsistencyError when a protected demand is lost or a recovered
// stream differs from its payload.
RecoveryTrace simulate_failure(const Instance& instance,
                               const DesignSolution& solution,
                               EdgeId failed_edge,
                               const std::map<int, BitStream>& payloads);

// simulate_failure for every fiber, in edge order.
std::vector<RecoveryTrace> simulate_all_failures(
    const Instance& instance, const DesignSolution& solution,
    const std::map<int, BitStream>& payloads);

struct FlowSecurity {
  int confidential_demand = 0;
  int carrier_demand = 0;
  int tapped_links = 0;
  double ones_fraction = 0.0;
  std::int64_t extra_channels = 0;
};

struct SecurityReport {
  std::vector<FlowSecurity> flows;
};

// For every encrypted flow:
//   s1 tapping any link of the confidential demand's lightpaths yields the
//      ciphertext, never the plaintext;
//   s2 the destination decrypts the plaintext exactly;
//   s3 `key_sample` (at least 1e5 bits) XOR an idle all-zero line has a
//      ones-fraction in [0.49, 0.51];
//   s4 the design uses no channel beyond the unencrypted one.
// Throws SecurityViolationError naming the condition and, for s1, the link.
// Also throws when a served confidential demand has no flow.
SecurityReport check_security(const Instance& instance,
                              const DesignSolution& solution,
                              const std::map<int, BitStream>& payloads,
                              const BitStream& key_sample);

}  // namespace ncopt

#endif  // NCOPT_VERIFY_HPP_
