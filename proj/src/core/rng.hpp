#pragma once

#include <cstdint>

namespace cw {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Counter-based generator keyed by (seed, trial, step). Draws are pure
// functions of the key, so trials can run on any worker in any order and
// still reproduce bit-exactly.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;

  std::uint64_t draw(std::uint64_t step) const {
    std::uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ull);
    h = mix64(h ^ (0xbf58476d1ce4e5b9ull * (trial + 1)));
    h = mix64(h ^ (0x94d049bb133111ebull * (step + 1)));
    return h;
  }

  // Uniform value in [0, n) via the fixed-point multiply reduction.
  std::uint64_t below(std::uint64_t step, std::uint64_t n) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(draw(step)) * n) >> 64);
  }
};

}  // namespace cw
