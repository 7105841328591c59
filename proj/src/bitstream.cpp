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

#include "ncopt/bitstream.hpp"

#include <bit>
#include <random>

#include "ncopt/errors.hpp"

namespace ncopt {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}

void require_same_length(const BitStream& a, const BitStream& b) {
  if (a.size() != b.size()) {
    throw LengthMismatchError(
        "bit stream lengths differ: " + std::to_string(a.size()) + " vs " +
        std::to_string(b.size()));
  }
}

}  // namespace

BitStream::BitStream(std::size_t length)
    : length_(length), words_(words_for(length), 0) {}

BitStream BitStream::from_string(std::string_view bits) {
  BitStream s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw InvariantError("bit string contains '" + std::string(1, bits[i]) +
                           "'");
    }
    s.set(i, bits[i] == '1');
  }
  return s;
}

BitStream BitStream::random(std::size_t length, std::uint64_t seed) {
  BitStream s(length);
  std::mt19937_64 rng(seed);
  for (auto& w : s.words_) w = rng();
  s.mask_tail();
  return s;
}

bool BitStream::bit(std::size_t i) const {
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitStream::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitStream::count_ones() const {
  std::size_t ones = 0;
  for (std::uint64_t w : words_) ones += std::popcount(w);
  return ones;
}

double BitStream::ones_fraction() const {
  return length_ == 0
             ? 0.0
             : static_cast<double>(count_ones()) / static_cast<double>(length_);
}

std::string BitStream::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

std::string BitStream::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < length_; i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < length_ && bit(i + j)) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitStream BitStream::from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) {
    throw InvariantError("hex stream has wrong length");
  }
  BitStream s(length);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[k];
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else {
      throw InvariantError("bad hex digit");
    }
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t i = 4 * k + j;
      if (i < length) s.set(i, (nibble >> (3 - j)) & 1);
    }
  }
  return s;
}

BitStream BitStream::tiled(std::size_t length) const {
  if (length_ == 0) throw InvariantError("cannot tile an empty stream");
  BitStream s(length);
  for (std::size_t i = 0; i < length; ++i) s.set(i, bit(i % length_));
  return s;
}

BitStream& BitStream::operator^=(const BitStream& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void BitStream::mask_tail() {
  if (const std::size_t r = length_ % kWordBits; r != 0) {
    words_.back() &= (std::uint64_t{1} << r) - 1;
  }
}

BitStream xor_combine(const BitStream& a, const BitStream& b) {
  BitStream out = a;
  out ^= b;
  return out;
}

BitStream decode_lost(const BitStream& surviving_working,
                      const BitStream& encoded) {
  return xor_combine(surviving_working, encoded);
}

BitStream encrypt_route(const BitStream& carrier_stream,
                        const BitStream& confidential_stream) {
  return xor_combine(carrier_stream, confidential_stream);
}

}  // namespace ncopt
