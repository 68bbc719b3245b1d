#pragma once

#include <cstdint>
#include <random>

namespace hvol {

/// Campaign randomness.  The stream generator is std::mt19937_64; per-trial
/// seeds are derived from the master seed with a splitmix64 finalizer, so
/// trial i's stream depends only on (master, i).  Trials can therefore run
/// in any order, or in parallel, without changing any result.

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t trial) {
  return mix64(master ^ mix64(trial + 1));
}

using Rng = std::mt19937_64;

inline Rng trialRng(std::uint64_t master, std::uint64_t trial) {
  return Rng(deriveSeed(master, trial));
}

/// Uniform double in [0, 1), from the top 53 bits of one engine draw.
/// Hand-rolled so report bytes do not depend on the standard library's
/// distribution internals.
inline double nextUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi] (inclusive).
inline std::int64_t nextInt(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline bool nextBit(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace hvol
