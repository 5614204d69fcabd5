#pragma once

#include <cstdint>
#include <random>

#include "gd/subset.hpp"

namespace gd {

/// Carriers up to this size are swept exhaustively; larger ones are sampled.
inline constexpr std::size_t kExhaustiveSweep = 4;

/// Calls agree(M, N) over pairs of subsets of an m-point carrier: every pair
/// when m <= 4, else `samples` seeded random pairs. Stops at the first false.
template <class F>
bool sweep_pairs(std::size_t m, std::uint64_t seed, int samples, F&& agree) {
  if (m <= kExhaustiveSweep) {
    const auto all = powerset(m);
    for (const auto& M : all) {
      for (const auto& N : all) {
        if (!agree(M, N)) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < samples; ++k) {
    Subset M(m), N(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (coin(rng)) M.set(i);
      if (coin(rng)) N.set(i);
    }
    if (!agree(M, N)) return false;
  }
  return true;
}

}  // namespace gd
