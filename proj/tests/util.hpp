#pragma once

// Shared helpers: seeded instance loops and brute-force oracles written
// straight from the definitions, independent of the library's shortcuts.

#include <doctest.h>

#include <functional>
#include <random>

#include "gd/action.hpp"
#include "gd/fintop.hpp"
#include "gd/generate.hpp"
#include "gd/groupoid.hpp"

namespace gdt {

using namespace gd;

inline Rng rng_for(std::uint64_t seed) { return Rng(seed * 0x9e3779b97f4a7c15ULL + 1); }

inline GenOptions small_opts(Topo t) {
  GenOptions o;
  o.topo = t;
  o.max_units = 4;
  o.max_arrows = 16;
  o.max_points = 6;
  return o;
}

inline Topo topo_of(std::size_t k) { return static_cast<Topo>(k % 3); }

inline Subset random_subset(Rng& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

/// Closure as the complement of the union of opens missing S.
inline Subset closure_oracle(const FiniteSpace& X, const Subset& S) {
  Subset out = full_set(X.size());
  for (const Subset& U : X.opens())
    if (!U.intersects(S)) out -= U;
  return out;
}

inline bool continuous_oracle(const FiniteSpace& dom, const FiniteSpace& cod, const Table& f) {
  for (const Subset& V : cod.opens())
    if (!dom.is_open(preimage(f, V))) return false;
  return true;
}

/// {xi : exists s in M admissible with xi . s in N}.
inline Subset recurrence_oracle(const Action& a, const Subset& M, const Subset& N) {
  Subset out(a.gpd().size());
  for (Index xi = 0; xi < a.gpd().size(); ++xi)
    for (Index s = 0; s < a.size(); ++s)
      if (M.test(s) && a.gpd().d(xi) == a.anchor(s) && N.test(a.act(xi, s))) out.set(xi);
  return out;
}

inline Subset orbit_oracle(const Action& a, Index s) {
  Subset out(a.size());
  for (Index xi = 0; xi < a.gpd().size(); ++xi)
    if (a.admissible(xi, s)) out.set(a.act(xi, s));
  return out;
}

/// Invariant sets enumerated as unions of orbits.
inline std::vector<Subset> invariant_oracle(const Action& a) {
  std::vector<Subset> orbs;
  Subset seen(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    if (seen.test(s)) continue;
    const Subset o = orbit_oracle(a, s);
    seen |= o;
    orbs.push_back(o);
  }
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << orbs.size()); ++mask) {
    Subset u(a.size());
    for (std::size_t i = 0; i < orbs.size(); ++i)
      if (mask >> i & 1) u |= orbs[i];
    out.push_back(u);
  }
  return out;
}

inline void for_actions(std::size_t n, std::uint64_t seed, const std::function<void(const Action&, std::size_t)>& f) {
  for (std::size_t k = 0; k < n; ++k) {
    Rng rng = rng_for(seed + k);
    const ActionPtr a = gen_action(rng, small_opts(topo_of(k)));
    f(*a, k);
  }
}

}  // namespace gdt
