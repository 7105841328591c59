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

#include "ncopt/coding.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ncopt/bitstream.hpp"
#include "ncopt/errors.hpp"

using namespace ncopt;

namespace {

bool on(const Topology& topo, const Path& p, EdgeId e) {
  for (LinkId id : p.links) {
    if (topo.edge_of(id) == e) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("coding") {
  TEST_CASE("butterfly pair codes at the relay") {
    const Topology topo = fixtures::butterfly();
    const PathPair a{make_path(topo, {1}), make_path(topo, {5, 9})};
    const PathPair b{make_path(topo, {3}), make_path(topo, {7, 9})};
    const auto g = codable(topo, 1, a, 2, b);
    REQUIRE(g);
    CHECK(g->coding_node == 4);
    CHECK(g->encoded_segment.links == std::vector<LinkId>{9});
    CHECK(g->branch_a.links == std::vector<LinkId>{5});
    CHECK(g->branch_b.links == std::vector<LinkId>{7});
    const auto h = codable(topo, 2, b, 1, a);
    REQUIRE(h);
    CHECK(h->coding_node == g->coding_node);
    CHECK(h->encoded_segment == g->encoded_segment);
  }

  TEST_CASE("conditions that block coding") {
    const Topology topo = fixtures::butterfly();
    const PathPair a{make_path(topo, {1}), make_path(topo, {5, 9})};
    // Different destination.
    const PathPair to_x{make_path(topo, {7}), make_path(topo, {3, 10})};
    CHECK_FALSE(codable(topo, a, to_x));
    // No shared suffix: B protected over its direct link instead.
    const PathPair b_swapped{make_path(topo, {7, 9}), make_path(topo, {3})};
    CHECK_FALSE(codable(topo, a, b_swapped));
    // Segment on a working path: both demands work over X->C.
    const PathPair a2{make_path(topo, {5, 9}), make_path(topo, {1})};
    const PathPair b2{make_path(topo, {7, 9}), make_path(topo, {3})};
    CHECK_FALSE(codable(topo, a2, b2));
    // Unprotected demand.
    const PathPair bare{make_path(topo, {3}), Path{}};
    CHECK_FALSE(codable(topo, a, bare));
  }

  TEST_CASE("working paths sharing a fiber are rejected") {
    // Ring 1-2-3-4-1 plus chord 2-4. Demands 1->3 and 2->3.
    const Topology topo("ring", Technology::kWdm, {1, 2, 3, 4},
                        {{1, 1, 2, 1, 4},
                         {2, 2, 1, 1, 4},
                         {3, 2, 3, 1, 4},
                         {4, 3, 2, 1, 4},
                         {5, 3, 4, 1, 4},
                         {6, 4, 3, 1, 4},
                         {7, 4, 1, 1, 4},
                         {8, 1, 4, 1, 4},
                         {9, 2, 4, 1, 4},
                         {10, 4, 2, 1, 4}});
    const PathPair a{make_path(topo, {1, 3}), make_path(topo, {8, 6})};
    const PathPair b{make_path(topo, {3}), make_path(topo, {2, 8, 6})};
    // Both work over link 3 (fiber 2-3).
    CHECK_FALSE(codable(topo, a, b));
    // Fiber 4-3 carries A's protection and C's work.
    const PathPair c{make_path(topo, {9, 6}), make_path(topo, {3})};
    CHECK_FALSE(codable(topo, a, c));
  }

  TEST_CASE("every codable group survives any single cut") {
    int groups = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      auto t = fixtures::random_tiny(seed, Layer::kOpaque);
      const Topology& topo = t.topology;
      std::vector<std::vector<PathPair>> cands;
      for (const Demand& d : t.demands) {
        try {
          cands.push_back(candidate_pairs(topo, d, 50));
        } catch (const Error&) {
          cands.emplace_back();
        }
      }
      for (std::size_t i = 0; i < t.demands.size(); ++i) {
        for (std::size_t j = i + 1; j < t.demands.size(); ++j) {
          for (const PathPair& pa : cands[i]) {
            for (const PathPair& pb : cands[j]) {
              const auto g = codable(topo, pa, pb);
              const auto h = codable(topo, pb, pa);
              CHECK(g.has_value() == h.has_value());
              if (!g) continue;
              ++groups;
              CHECK(g->coding_node == h->coding_node);
              CHECK(g->encoded_segment == h->encoded_segment);
              for (const Edge& e : topo.edges()) {
                const bool wa = on(topo, pa.working, e.id);
                const bool wb = on(topo, pb.working, e.id);
                const bool enc = on(topo, g->encoded_segment, e.id) ||
                                 (on(topo, g->branch_a, e.id) && wb) ||
                                 (on(topo, g->branch_b, e.id) && wa);
                CHECK(int{wa} + int{wb} + int{enc} <= 1);
              }
            }
          }
        }
      }
    }
    CHECK(groups > 20);
  }

  TEST_CASE("xor algebra on random streams") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
      const std::size_t len = 1 + rng() % 300;
      const BitStream a = BitStream::random(len, rng());
      const BitStream b = BitStream::random(len, rng());
      const BitStream c = BitStream::random(len, rng());
      CHECK(xor_combine(a, b) == xor_combine(b, a));
      CHECK(xor_combine(xor_combine(a, b), c) ==
            xor_combine(a, xor_combine(b, c)));
      CHECK(xor_combine(a, a) == BitStream(len));
      CHECK(decode_lost(a, xor_combine(a, b)) == b);
    }
  }

  TEST_CASE("bitstream formats") {
    const BitStream s = BitStream::from_string("10110");
    CHECK(s.size() == 5);
    CHECK(s.to_string() == "10110");
    CHECK(s.count_ones() == 3);
    CHECK(s.to_hex() == "b0");
    CHECK(BitStream::from_hex("b0", 5) == s);
    CHECK(s.tiled(12).to_string() == "101101011010");
    CHECK_THROWS_AS(BitStream::from_string("102"), InvariantError);
    CHECK_THROWS_AS(xor_combine(s, BitStream(4)), LengthMismatchError);
    CHECK(BitStream::random(64, 9) == BitStream::random(64, 9));
  }

  TEST_CASE("encryption round trip") {
    const BitStream key = BitStream::random(256, 1);
    const BitStream msg = BitStream::random(256, 2);
    const BitStream cipher = encrypt_route(key, msg);
    CHECK(cipher != msg);
    CHECK(xor_combine(cipher, key) == msg);
  }

}  // TEST_SUITE
