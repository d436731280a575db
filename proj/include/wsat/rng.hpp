#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace wsat {

// splitmix64 finalizer, used for seed spreading and substream derivation.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a salt
// (restart index, run index, ...).
constexpr uint64_t seed_combine(uint64_t base, uint64_t salt) {
  return mix64(base ^ mix64(salt));
}

// FNV-1a 64, used to fold instance paths into per-run seeds.
constexpr uint64_t hash_bytes(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Deterministic RNG facade. The engine is std::mt19937_64, whose raw output
// sequence is pinned by the standard; the derived draws below are implemented
// here instead of with std:: distributions (whose algorithms vary between
// standard libraries). Identical seeds therefore replay identical draw
// sequences on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform in [0, bound) via 64x32 fixed-point scaling; exactly one draw.
  uint32_t below(uint32_t bound) {
    return static_cast<uint32_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1) with 53 random bits; exactly one draw.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // True with probability p; exactly one draw.
  bool chance(double p) { return unit() < p; }

  // Fisher-Yates, consuming one draw per index in descending order.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = below(static_cast<uint32_t>(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wsat
