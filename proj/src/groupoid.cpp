#include "gd/groupoid.hpp"

#include <algorithm>
#include <map>

namespace gd {

namespace {

std::string lab(const Groupoid& g, Index a) { return g.label(a); }

}  // namespace

Groupoid::Groupoid(FiniteSpace arrows, Subset units, Table src, Table rng, Table inv, Table mul)
    : arrows_(std::move(arrows)),
      units_(std::move(units)),
      src_(std::move(src)),
      rng_(std::move(rng)),
      inv_(std::move(inv)),
      mul_(std::move(mul)) {
  const std::size_t n = arrows_.size();
  if (units_.size() != n) throw Error("groupoid: unit subset has wrong carrier size");
  check_table(src_, n, n, "groupoid src");
  check_table(rng_, n, n, "groupoid rng");
  check_table(inv_, n, n, "groupoid inv");
  if (mul_.size() != n * n) throw Error("groupoid: mul table has wrong size");
  for (Index v : mul_) {
    if (v != kNone && v >= n) throw Error("groupoid: mul entry out of range");
  }
  unit_list_ = members(units_);
  unit_pos_.assign(n, kNone);
  for (std::size_t i = 0; i < unit_list_.size(); ++i) unit_pos_[unit_list_[i]] = static_cast<Index>(i);
}

Groupoid Groupoid::from_triples(FiniteSpace arrows, Subset units, Table src, Table rng,
                                Table inv, const std::vector<std::array<Index, 3>>& mul) {
  const std::size_t n = arrows.size();
  check_table(src, n, n, "groupoid src");
  check_table(rng, n, n, "groupoid rng");
  Table dense(n * n, kNone);
  for (const auto& [i, j, k] : mul) {
    if (i >= n || j >= n || k >= n) throw Error("groupoid: mul entry out of range");
    if (src[i] != rng[j]) {
      throw Error("groupoid: mul entry for non-composable pair (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }
    if (dense[i * n + j] != kNone) {
      throw Error("groupoid: duplicate mul entry (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }
    dense[i * n + j] = k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == rng[j] && dense[i * n + j] == kNone) {
        throw Error("groupoid: mul missing composable pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      }
    }
  }
  return Groupoid(std::move(arrows), std::move(units), std::move(src), std::move(rng),
                  std::move(inv), std::move(dense));
}

Groupoid Groupoid::with_topology(FiniteSpace arrows) const {
  if (arrows.size() != size()) throw Error("with_topology: size mismatch");
  arrows.set_labels(arrows_.labels());
  return Groupoid(std::move(arrows), units_, src_, rng_, inv_, mul_);
}

Report validate_groupoid(const Groupoid& g) {
  const std::size_t n = g.size();
  for (Index a = 0; a < n; ++a) {
    if (!g.is_unit(g.d(a)) || !g.is_unit(g.r(a))) {
      return Violation{"unit_valued", "xi=" + lab(g, a)};
    }
  }
  for (Index x : g.unit_list()) {
    if (g.d(x) != x || g.r(x) != x) return Violation{"units_fixed", "x=" + lab(g, x)};
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const bool defined = g.mul(a, b) != kNone;
      if (defined != g.composable(a, b)) {
        return Violation{"mul_domain", "(" + lab(g, a) + "," + lab(g, b) + ")"};
      }
      if (!defined) continue;
      const Index ab = g.mul(a, b);
      if (g.d(ab) != g.d(b) || g.r(ab) != g.r(a)) {
        return Violation{"mul_source_range", "(" + lab(g, a) + "," + lab(g, b) + ")"};
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (g.mul(a, g.d(a)) != a || g.mul(g.r(a), a) != a) {
      return Violation{"unit_law", "xi=" + lab(g, a)};
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!g.composable(a, b)) continue;
      const Index ab = g.mul(a, b);
      for (Index c = 0; c < n; ++c) {
        if (!g.composable(b, c)) continue;
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          return Violation{"associativity",
                           "(" + lab(g, a) + "," + lab(g, b) + "," + lab(g, c) + ")"};
        }
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    const Index ai = g.inv(a);
    if (g.inv(ai) != a) return Violation{"inv_involution", "xi=" + lab(g, a)};
    if (g.d(ai) != g.r(a) || g.mul(a, ai) != g.r(a) || g.mul(ai, a) != g.d(a)) {
      return Violation{"inverse_law", "xi=" + lab(g, a)};
    }
  }
  const auto& top = g.arrows();
  if (!is_continuous(top, top, g.inv_table())) {
    for (Index a = 0; a < n; ++a) {
      bool bad = false;
      for_each_member(top.neighborhood(a), [&](Index b) {
        if (!top.leq(g.inv(a), g.inv(b))) bad = true;
      });
      if (bad) return Violation{"inv_continuous", "xi=" + lab(g, a)};
    }
  }
  // Minimal neighbourhood of (a,b) in the composable pairs is (U_a x U_b) cap Xi^(2).
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!g.composable(a, b)) continue;
      const Subset& target = top.neighborhood(g.mul(a, b));
      bool bad = false;
      for_each_member(top.neighborhood(a), [&](Index a2) {
        if (bad) return;
        for_each_member(top.neighborhood(b), [&](Index b2) {
          if (!bad && g.composable(a2, b2) && !target.test(g.mul(a2, b2))) bad = true;
        });
      });
      if (bad) return Violation{"mul_continuous", "(" + lab(g, a) + "," + lab(g, b) + ")"};
    }
  }
  return std::nullopt;
}

Groupoid pair_groupoid(std::size_t n, std::vector<std::string> point_labels) {
  if (n == 0) throw Error("pair groupoid needs at least one unit");
  if (point_labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) point_labels.push_back(std::to_string(i));
  }
  if (point_labels.size() != n) throw Error("pair groupoid: label count mismatch");
  const std::size_t m = n * n;
  Table src(m), rng(m), inv(m), mul(m * m, kNone);
  std::vector<std::string> labels(m);
  Subset units(m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Index a = static_cast<Index>(x * n + y);
      rng[a] = static_cast<Index>(x * n + x);
      src[a] = static_cast<Index>(y * n + y);
      inv[a] = static_cast<Index>(y * n + x);
      labels[a] = "(" + point_labels[x] + "," + point_labels[y] + ")";
      if (x == y) units.set(a);
      for (std::size_t z = 0; z < n; ++z) {
        mul[a * m + y * n + z] = static_cast<Index>(x * n + z);
      }
    }
  }
  return Groupoid(FiniteSpace::discrete(m, std::move(labels)), std::move(units), std::move(src),
                  std::move(rng), std::move(inv), std::move(mul));
}

Groupoid group_groupoid(const std::vector<std::vector<Index>>& cayley,
                        std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error("group needs at least one element");
  Table src(n, 0), rng(n, 0), inv(n, kNone), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) throw Error("cayley table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      mul[a * n + b] = cayley[a][b];
      if (cayley[a][b] == 0) inv[a] = static_cast<Index>(b);
    }
    if (inv[a] == kNone) throw Error("cayley table: element without inverse");
  }
  if (labels.empty()) {
    labels.push_back("e");
    for (std::size_t a = 1; a < n; ++a) labels.push_back("g" + std::to_string(a));
  }
  return Groupoid(FiniteSpace::discrete(n, std::move(labels)), singleton(n, 0), std::move(src),
                  std::move(rng), std::move(inv), std::move(mul));
}

Groupoid cyclic_group(std::size_t n) {
  std::vector<std::vector<Index>> cayley(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) cayley[a][b] = static_cast<Index>((a + b) % n);
  }
  return group_groupoid(cayley);
}

Groupoid trivial_groupoid(const FiniteSpace& space) {
  const std::size_t n = space.size();
  Table id = identity_table(n);
  Table mul(n * n, kNone);
  for (std::size_t a = 0; a < n; ++a) mul[a * n + a] = static_cast<Index>(a);
  return Groupoid(space, full_set(n), id, id, id, std::move(mul));
}

Groupoid product_groupoid(const Groupoid& a, const Groupoid& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto id = [nb](Index i, Index j) { return static_cast<Index>(i * nb + j); };
  Table src(n), rng(n), inv(n), mul(n * n, kNone);
  Subset units(n);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      const Index p = id(i, j);
      src[p] = id(a.d(i), b.d(j));
      rng[p] = id(a.r(i), b.r(j));
      inv[p] = id(a.inv(i), b.inv(j));
      if (a.is_unit(i) && b.is_unit(j)) units.set(p);
    }
  }
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      for (Index k = 0; k < na; ++k) {
        if (!a.composable(i, k)) continue;
        for (Index l = 0; l < nb; ++l) {
          if (b.composable(j, l)) mul[id(i, j) * n + id(k, l)] = id(a.mul(i, k), b.mul(j, l));
        }
      }
    }
  }
  return Groupoid(product_space(a.arrows(), b.arrows()), std::move(units), std::move(src),
                  std::move(rng), std::move(inv), std::move(mul));
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  const std::size_t na = a.size(), n = na + b.size();
  Table src(n), rng(n), inv(n), mul(n * n, kNone);
  Subset units(n);
  std::vector<Subset> nbhd;
  std::vector<std::string> labels;
  auto shift = [na](Index v) { return static_cast<Index>(v + na); };
  for (Index i = 0; i < n; ++i) {
    const bool left = i < na;
    const Groupoid& g = left ? a : b;
    const Index li = left ? i : static_cast<Index>(i - na);
    auto lift = [&](Index v) { return left ? v : shift(v); };
    src[i] = lift(g.d(li));
    rng[i] = lift(g.r(li));
    inv[i] = lift(g.inv(li));
    if (g.is_unit(li)) units.set(i);
    Subset u(n);
    for_each_member(g.arrows().neighborhood(li), [&](Index v) { u.set(lift(v)); });
    nbhd.push_back(std::move(u));
    labels.push_back(g.label(li));
    for (Index j = 0; j < g.size(); ++j) {
      if (g.composable(li, j)) mul[i * n + lift(j)] = lift(g.mul(li, j));
    }
  }
  return Groupoid(FiniteSpace::from_neighborhoods(std::move(nbhd), std::move(labels)),
                  std::move(units), std::move(src), std::move(rng), std::move(inv),
                  std::move(mul));
}

namespace {

void require_units(const Groupoid& g, const Subset& s, const char* what) {
  if (s.size() != g.size()) throw Error(std::string(what) + ": wrong carrier size");
  if (!s.is_subset_of(g.units())) throw Error(std::string(what) + ": contains a non-unit");
}

}  // namespace

Fibers fibers(const Groupoid& g, const Subset& M, const Subset& N) {
  require_units(g, M, "fibers M");
  require_units(g, N, "fibers N");
  Fibers f{preimage(g.src(), M), preimage(g.rng(), N), {}};
  f.both = f.source & f.range;
  return f;
}

Subset source_fiber(const Groupoid& g, Index x) {
  if (x >= g.size() || !g.is_unit(x)) throw Error("source_fiber: not a unit");
  return preimage(g.src(), singleton(g.size(), x));
}

Subset range_fiber(const Groupoid& g, Index x) {
  if (x >= g.size() || !g.is_unit(x)) throw Error("range_fiber: not a unit");
  return preimage(g.rng(), singleton(g.size(), x));
}

Subset isotropy(const Groupoid& g, Index x) { return source_fiber(g, x) & range_fiber(g, x); }

Subset unit_orbit(const Groupoid& g, Index x) {
  return image(g.rng(), source_fiber(g, x), g.size());
}

bool is_transitive_groupoid(const Groupoid& g) {
  if (g.unit_count() == 0) return true;
  return unit_orbit(g, g.unit_list().front()) == g.units();
}

Table source_to_unit_space(const Groupoid& g) {
  Table t(g.size());
  for (Index a = 0; a < g.size(); ++a) t[a] = g.unit_position(g.d(a));
  return t;
}

Table range_to_unit_space(const Groupoid& g) {
  Table t(g.size());
  for (Index a = 0; a < g.size(); ++a) t[a] = g.unit_position(g.r(a));
  return t;
}

bool is_open_groupoid(const Groupoid& g) {
  return is_open_map(g.arrows(), g.unit_space(), source_to_unit_space(g));
}

bool range_is_open(const Groupoid& g) {
  return is_open_map(g.arrows(), g.unit_space(), range_to_unit_space(g));
}

SubgroupoidCheck subgroupoid_check(const Groupoid& g, const Subset& delta) {
  SubgroupoidCheck out;
  bool ok = true;
  for_each_member(delta, [&](Index a) {
    if (!delta.test(g.inv(a))) ok = false;
    for_each_member(delta, [&](Index b) {
      if (g.composable(a, b) && !delta.test(g.mul(a, b))) ok = false;
    });
  });
  out.is_subgroupoid = ok;
  out.is_wide = ok && g.units().is_subset_of(delta);
  return out;
}

Subset product_set(const Groupoid& g, const Subset& A, const Subset& B) {
  Subset out(g.size());
  for_each_member(A, [&](Index a) {
    for_each_member(B, [&](Index b) {
      if (g.composable(a, b)) out.set(g.mul(a, b));
    });
  });
  return out;
}

Recognition recognize(const Groupoid& g) {
  Recognition rec;
  rec.is_group = g.unit_count() == 1;
  rec.is_group_bundle = g.src() == g.rng();
  const std::size_t k = g.unit_count();
  if (g.size() == k * k) {
    std::vector<bool> hit(k * k, false);
    bool ok = true;
    for (Index a = 0; a < g.size() && ok; ++a) {
      const std::size_t slot = g.unit_position(g.r(a)) * k + g.unit_position(g.d(a));
      if (hit[slot]) ok = false;
      hit[slot] = true;
    }
    rec.is_pair_groupoid = ok;
  }
  return rec;
}

Report validate_functor(const Groupoid& G, const Groupoid& H, std::span<const Index> psi) {
  if (psi.size() != G.size()) return Violation{"functor_table", "wrong size"};
  for (Index a = 0; a < G.size(); ++a) {
    if (psi[a] >= H.size()) return Violation{"functor_table", "entry out of range"};
  }
  for (Index x : G.unit_list()) {
    if (!H.is_unit(psi[x])) return Violation{"functor_units", "x=" + G.label(x)};
  }
  for (Index a = 0; a < G.size(); ++a) {
    if (H.d(psi[a]) != psi[G.d(a)] || H.r(psi[a]) != psi[G.r(a)]) {
      return Violation{"functor_source_range", "xi=" + G.label(a)};
    }
  }
  for (Index a = 0; a < G.size(); ++a) {
    for (Index b = 0; b < G.size(); ++b) {
      if (G.composable(a, b) && psi[G.mul(a, b)] != H.mul(psi[a], psi[b])) {
        return Violation{"functor_mul", "(" + G.label(a) + "," + G.label(b) + ")"};
      }
    }
  }
  if (!is_continuous(G.arrows(), H.arrows(), psi)) return Violation{"functor_continuous", ""};
  return std::nullopt;
}

Table unit_restriction(const Groupoid& G, std::span<const Index> psi) {
  Table t;
  t.reserve(G.unit_count());
  for (Index x : G.unit_list()) t.push_back(psi[x]);
  return t;
}

Table unit_map_positions(const Groupoid& G, const Groupoid& H, std::span<const Index> psi) {
  Table t;
  t.reserve(G.unit_count());
  for (Index x : G.unit_list()) t.push_back(H.unit_position(psi[x]));
  return t;
}

}  // namespace gd
