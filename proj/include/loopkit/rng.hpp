#pragma once

#include <cstdint>

namespace loopkit {

// Counter-based deterministic stream: sample i depends only on (seed, i),
// never on thread count or iteration order.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t stream_draw(uint64_t seed, uint64_t index, uint64_t lane = 0) {
  return splitmix64(seed ^ splitmix64(index * 0xd1342543de82ef95ULL + lane));
}

/// Unbiased-enough bounded draw (n is tiny compared to 2^64).
inline int bounded(uint64_t r, int n) {
  return static_cast<int>(static_cast<uint64_t>((__uint128_t(r) * uint64_t(n)) >> 64));
}

}  // namespace loopkit
