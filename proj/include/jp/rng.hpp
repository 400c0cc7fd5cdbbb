#pragma once

#include <cstdint>
#include <random>

namespace jp {

// All randomness in this project flows through std::mt19937_64 seeded with a
// 64-bit value, with bounded draws taken by rejection sampling (below) so the
// generated sequences are identical across platforms and standard libraries.
// Derived streams (restarts, per-instance seeds) come from mix_seed.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

// Uniform draw from [0, bound). Rejects the biased tail of the 64-bit range;
// do not replace with std::uniform_int_distribution, whose output is not
// pinned by the standard.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace jp
