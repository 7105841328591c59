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


// Line tokenizing shared by the text formats.

#ifndef NCOPT_SRC_TEXT_UTIL_HPP_
#define NCOPT_SRC_TEXT_UTIL_HPP_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncopt/errors.hpp"

namespace ncopt::detail {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

// Splits into whitespace-separated tokens, dropping '#' comments and blank
// lines. The views point into `text`.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() &&
             (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) {
        ++pos;
      }
      std::size_t start = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t' &&
             raw[pos] != '\r') {
        ++pos;
      }
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <typename Int = int>
Int parse_int(const Line& line, std::size_t index, std::string_view field) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, "missing field '" + std::string(field) + "'");
  }
  std::string_view token = line.tokens[index];
  Int value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, "field '" + std::string(field) +
                                      "' is not an integer: '" +
                                      std::string(token) + "'");
  }
  return value;
}

inline bool parse_flag(const Line& line, std::size_t index,
                       std::string_view field) {
  int value = parse_int(line, index, field);
  if (value != 0 && value != 1) {
    throw ParseError(line.number,
                     "field '" + std::string(field) + "' must be 0 or 1");
  }
  return value == 1;
}

inline void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, "'" + std::string(line.tokens[0]) +
                                      "' expects " + std::to_string(arity - 1) +
                                      " fields, got " +
                                      std::to_string(line.tokens.size() - 1));
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ncopt::detail

#endif  // NCOPT_SRC_TEXT_UTIL_HPP_
