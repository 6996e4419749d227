#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace earl {

// SplitMix64 finalizer; used to spread seeds and to derive substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Wrapper around mt19937_64 with explicit, platform-independent draw
// primitives. The run loops depend on the exact number of draws per
// generation, so all randomness goes through these three methods.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, bound) via Lemire's multiply-shift with
  // rejection, one draw in the common case.
  std::uint32_t next_index(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_index: bound must be positive");
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - std::uint64_t(bound)) % bound;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 64);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace earl
