#pragma once

#include <cstdint>
#include <random>

namespace pocut {

// All randomness in the toolkit flows through std::mt19937_64 seeded from a
// user-supplied 64-bit seed. Child streams (restarts, ensemble members,
// parallel workers) are derived with derive_seed() so runs reproduce exactly
// for a given master seed regardless of scheduling.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic child seed for stream `stream` of `master`. Equivalent to
// jumping a splitmix64 sequence ahead by `stream` steps and scrambling once.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + stream * 0x9e3779b97f4a7c15ULL);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform double in [0, 1) from the top 53 bits. Used instead of
// std::uniform_real_distribution so that streams do not depend on the
// standard library implementation.
inline double uniform_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_double(rng) < p; }

// Uniform integer in [0, bound) without the libstdc++/libc++ distribution
// variance; bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // rejection sampling on the top of the range to avoid modulo bias
  const std::uint64_t limit = ~0ULL - ~0ULL % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace pocut
