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

#ifndef NCOPT_MODE_HPP_
#define NCOPT_MODE_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace ncopt {

// The six design problems. Each coded mode has an uncoded baseline on the
// same network layer.
enum class ProblemMode { kRouting, kRnca, kRwa, kRwnca, kRsa, kRsnca };

enum class Objective { kMinCost, kMaxThroughput };

// Opaque: OEO at every node, only per-link channel counts matter.
// Transparent: one wavelength index end to end.
// Elastic: one contiguous slot interval end to end.
enum class Layer { kOpaque, kTransparent, kElastic };

Layer layer_of(ProblemMode mode);
bool is_coded(ProblemMode mode);
ProblemMode baseline_of(ProblemMode mode);
ProblemMode coded_of(ProblemMode mode);

std::string_view to_string(ProblemMode mode);
std::string_view to_string(Objective objective);
std::optional<ProblemMode> parse_mode(std::string_view text);
std::optional<Objective> parse_objective(std::string_view text);

}  // namespace ncopt

#endif  // NCOPT_MODE_HPP_
