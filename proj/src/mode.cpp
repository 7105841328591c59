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

#include "ncopt/mode.hpp"

#include <array>
#include <utility>

namespace ncopt {
namespace {

constexpr std::array<std::pair<ProblemMode, std::string_view>, 6> kModeNames{{
    {ProblemMode::kRouting, "routing"},
    {ProblemMode::kRnca, "rnca"},
    {ProblemMode::kRwa, "rwa"},
    {ProblemMode::kRwnca, "rwnca"},
    {ProblemMode::kRsa, "rsa"},
    {ProblemMode::kRsnca, "rsnca"},
}};

}  // namespace

Layer layer_of(ProblemMode mode) {
  switch (mode) {
    case ProblemMode::kRouting:
    case ProblemMode::kRnca:
      return Layer::kOpaque;
    case ProblemMode::kRwa:
    case ProblemMode::kRwnca:
      return Layer::kTransparent;
    case ProblemMode::kRsa:
    case ProblemMode::kRsnca:
      return Layer::kElastic;
  }
  return Layer::kOpaque;
}

bool is_coded(ProblemMode mode) {
  return mode == ProblemMode::kRnca || mode == ProblemMode::kRwnca ||
         mode == ProblemMode::kRsnca;
}

ProblemMode baseline_of(ProblemMode mode) {
  switch (layer_of(mode)) {
    case Layer::kOpaque:
      return ProblemMode::kRouting;
    case Layer::kTransparent:
      return ProblemMode::kRwa;
    case Layer::kElastic:
      return ProblemMode::kRsa;
  }
  return ProblemMode::kRouting;
}

ProblemMode coded_of(ProblemMode mode) {
  switch (layer_of(mode)) {
    case Layer::kOpaque:
      return ProblemMode::kRnca;
    case Layer::kTransparent:
      return ProblemMode::kRwnca;
    case Layer::kElastic:
      return ProblemMode::kRsnca;
  }
  return ProblemMode::kRnca;
}

std::string_view to_string(ProblemMode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "?";
}

std::string_view to_string(Objective objective) {
  return objective == Objective::kMinCost ? "cost" : "throughput";
}

std::optional<ProblemMode> parse_mode(std::string_view text) {
  for (const auto& [m, name] : kModeNames) {
    if (name == text) return m;
  }
  return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "cost") return Objective::kMinCost;
  if (text == "throughput") return Objective::kMaxThroughput;
  return std::nullopt;
}

}  // namespace ncopt
