#pragma once

#include <cstdint>
#include <random>

namespace sqeeg {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent per-task seeds so that
// serial and parallel runs draw identical streams.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix_seed(mix_seed(base) ^ (index + 0x632be59bd9b4e019ULL));
}

/// Uniform integer in [lo, hi] without the implementation-defined mapping of
/// std::uniform_int_distribution. Modulo bias is below 2^-40 for the ranges
/// used here.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace sqeeg
