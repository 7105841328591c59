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

#ifndef NCOPT_BITSTREAM_HPP_
#define NCOPT_BITSTREAM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncopt {

// Fixed-length bit sequence standing in for an optical signal's payload.
// Bits past `size()` in the last word are always zero.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(std::size_t length);

  // "1010" -> bits 1,0,1,0. Throws InvariantError on other characters.
  static BitStream from_string(std::string_view bits);
  static BitStream random(std::size_t length, std::uint64_t seed);

  std::size_t size() const { return length_; }
  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value);
  std::size_t count_ones() const;
  double ones_fraction() const;

  std::string to_string() const;
  // Four bits per lowercase hex digit, first bit in the digit's high
  // position; used by trace files.
  std::string to_hex() const;
  static BitStream from_hex(std::string_view hex, std::size_t length);

  // Repeats this stream until `length` bits.
  BitStream tiled(std::size_t length) const;

  BitStream& operator^=(const BitStream& other);

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  void mask_tail();

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bitwise exclusive-or. Throws LengthMismatchError.
BitStream xor_combine(const BitStream& a, const BitStream& b);

// The lost working signal from the surviving one and the encoded
// (lost xor surviving) stream.
BitStream decode_lost(const BitStream& surviving_working,
                      const BitStream& encoded);

// Ciphertext sent end to end for a confidential demand: the carrier stream
// is the key.
BitStream encrypt_route(const BitStream& carrier_stream,
                        const BitStream& confidential_stream);

}  // namespace ncopt

#endif  // NCOPT_BITSTREAM_HPP_
