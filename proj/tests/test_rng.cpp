#include "wsat/rng.hpp"

#include <array>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace wsat;

TEST_CASE("engine output is the standard-pinned sequence") {
  // [rand.predef]: the 10000th consecutive invocation of a default-seeded
  // mt19937_64 produces this value. Anchors cross-platform reproducibility.
  std::mt19937_64 engine;
  for (int i = 0; i < 9999; ++i) engine();
  CHECK(engine() == 9981545732273789042ull);
}

TEST_CASE("derived draws replay exactly") {
  Rng rng(42);
  const std::array<uint32_t, 6> expected = {755, 639, 752, 136, 903, 94};
  for (uint32_t want : expected) CHECK(rng.below(1000) == want);

  Rng unit_rng(7);
  CHECK(unit_rng.unit() == doctest::Approx(0.75438530415285798).epsilon(1e-15));
}

TEST_CASE("shuffle is frozen Fisher-Yates") {
  Rng rng(0x12345678);
  std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  rng.shuffle(std::span<int>(v));
  CHECK(v == std::vector<int>{7, 8, 4, 1, 5, 3, 2, 6, 0, 9});
}

TEST_CASE("below covers its range without bias at test scale") {
  Rng rng(3);
  constexpr uint32_t kBound = 8;
  constexpr uint64_t kDraws = 80000;
  std::vector<uint64_t> counts(kBound, 0);
  for (uint64_t i = 0; i < kDraws; ++i) {
    const uint32_t x = rng.below(kBound);
    REQUIRE(x < kBound);
    ++counts[x];
  }
  CHECK(test::chi2_uniform(counts) < test::chi2_critical_001(kBound - 1));
}

TEST_CASE("chance honors its probability") {
  Rng rng(5);
  constexpr uint64_t kDraws = 100000;
  uint64_t hits = 0;
  for (uint64_t i = 0; i < kDraws; ++i)
    if (rng.chance(0.567)) ++hits;
  CHECK(test::binomial_sigmas(hits, kDraws, 0.567) < 5.0);

  Rng edge(6);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(edge.chance(0.0));
    CHECK(edge.chance(1.0));
  }
}

TEST_CASE("seed derivation helpers are stable") {
  CHECK(mix64(0) == 16294208416658607535ull);
  CHECK(seed_combine(1, 2) == 16171810823986729605ull);
  CHECK(hash_bytes("abc") == 16654208175385433931ull);
  CHECK(seed_combine(1, 2) != seed_combine(2, 1));
}
