#pragma once

#include <cstdint>
#include <random>

namespace bd2d {

using Rng = std::mt19937_64;

// Finalizer from the splitmix64 generator, used to turn (seed, stream)
// pairs into well-spread engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic engine for a (seed, stream, substream) triple. Replications
// and the independent draw streams inside one replication (placement,
// caching, requests) each get their own engine so that changing one knob
// never perturbs the others.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0,
                    std::uint64_t substream = 0) {
  const std::uint64_t mixed =
      splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ substream);
  return Rng(mixed);
}

inline double uniform_double(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace bd2d
