#include <doctest.h>

#include <map>
#include <random>

#include "reorderkit/disorder.hpp"
#include "reorderkit/reconstruct.hpp"
#include "support/naive.hpp"

using namespace reorderkit;

TEST_CASE("reconstruct examples") {
  CHECK(reconstruct({{4, 4, 4, 0}}) == Permutation{4, 2, 3, 1});
  CHECK(reconstruct({{0, 0, 0}}) == Permutation{1, 2, 3});
  CHECK(reconstruct({{3, 4, 3, 0}}) == Permutation{3, 4, 1, 2});
  CHECK(map_m(Permutation{3, 4, 1, 2}).values == std::vector<std::uint64_t>{3, 4, 3, 0});
  CHECK_FALSE(reconstruct({{1}}).has_value());
  CHECK_FALSE(reconstruct({{2, 2}}).has_value());
  CHECK(reconstruct({{}}) == Permutation{});
}

TEST_CASE("phases on (4,4,4,0)") {
  const auto trace = reconstruction_phases({{4, 4, 4, 0}});
  CHECK(trace.phase1_positions == std::vector<std::size_t>{1, 4});
  CHECK(trace.phase2_positions == std::vector<std::size_t>{2, 3});
  CHECK(trace.packet == std::vector<PacketId>{4, 2, 3, 1});
  CHECK(trace.ack == std::vector<PacketId>{1, 1, 1, 5});
}

TEST_CASE("phases on (2,2) yield a permutation that verification rejects") {
  const auto trace = reconstruction_phases({{2, 2}});
  CHECK(trace.packet == std::vector<PacketId>{2, 1});
  CHECK(map_m(IdSequence{2, 1}).values == std::vector<std::uint64_t>{2, 0});
}

TEST_CASE("the SUS=4 preimage of (4,4,4,0) is never returned") {
  const auto r = reconstruct({{4, 4, 4, 0}});
  REQUIRE(r.has_value());
  CHECK(*r != Permutation{4, 3, 2, 1});
  CHECK(map_m(IdSequence{4, 3, 2, 1}).values == std::vector<std::uint64_t>{4, 4, 4, 0});
}

TEST_CASE("exhaustive round trip and uniqueness for n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::map<naive::Seq, naive::Seq> low_sus_by_image;
    for (const auto& raw : naive::permutations(n)) {
      if (naive::lds_subsets(raw) > 3) continue;
      const Permutation p(raw);
      const auto w = map_m(p);
      REQUIRE(reconstruct(w) == p);
      // No other SUS <= 3 permutation shares this buffer sequence.
      auto [it, inserted] = low_sus_by_image.emplace(w.values, raw);
      REQUIRE(inserted);
    }
  }
}

TEST_CASE("completeness: infeasible buffer sequences are rejected (n <= 6)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<naive::Seq, naive::Seq> preimage;
    for (const auto& raw : naive::permutations(n)) {
      if (naive::sus_exhaustive(raw) <= 3) preimage.emplace(naive::buffer_sizes(raw), raw);
    }
    // Every w over {0..n}^n: feasible exactly when some SUS <= 3 permutation maps to it.
    std::vector<std::uint64_t> w(n, 0);
    while (true) {
      const auto r = reconstruct(BufferSequence{w});
      const auto it = preimage.find(w);
      if (it == preimage.end()) {
        REQUIRE_FALSE(r.has_value());
      } else {
        REQUIRE(r.has_value());
        REQUIRE(r->values() == it->second);
      }
      std::size_t k = 0;
      while (k < n && w[k] == n) w[k++] = 0;
      if (k == n) break;
      ++w[k];
    }
  }
}

TEST_CASE("property: random SUS<=3 permutations of length 100 round trip") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Permutation p(naive::random_sus3_permutation(100, rng));
    REQUIRE(sus(p) <= 3);
    REQUIRE(reconstruct(map_m(p)) == p);
  }
}

TEST_CASE("property: soundness on random buffer sequences") {
  std::mt19937_64 rng(5);
  std::size_t hits = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = 1 + rng() % 12;
    std::vector<std::uint64_t> w(n);
    for (auto& v : w) v = rng() % (n + 1);
    if (rng() % 2) w.back() = 0;
    const BufferSequence buffer{w};
    if (const auto r = reconstruct(buffer)) {
      ++hits;
      REQUIRE(map_m(*r) == buffer);
      REQUIRE(sus(*r) <= 3);
    }
  }
  // Random sequences are mostly infeasible; make sure the positive branch ran.
  CHECK(hits > 0);
}
