#include "gd/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace gd {

namespace {

SmallGroup cyclic(std::size_t n) {
  SmallGroup g{"C" + std::to_string(n), {}};
  g.mul.assign(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = static_cast<Index>((a + b) % n);
  return g;
}

SmallGroup klein() {
  SmallGroup g{"V4", {}};
  g.mul.assign(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) g.mul[a][b] = a ^ b;
  return g;
}

SmallGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  SmallGroup g{"S3", {}};
  g.mul.assign(6, std::vector<Index>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

std::vector<Index> shuffled(Rng& rng, std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

std::size_t popcount_mask(const Subset& s) { return s.count(); }

/// Left cosets gH: coset index per element and a representative per coset.
struct Cosets {
  Table of;
  std::vector<Index> rep;
};

Cosets cosets(const SmallGroup& G, const Subset& H) {
  Cosets c;
  c.of.assign(G.order(), kNone);
  for (Index g = 0; g < G.order(); ++g) {
    if (c.of[g] != kNone) continue;
    const auto k = static_cast<Index>(c.rep.size());
    c.rep.push_back(g);
    for_each_member(H, [&](Index h) { c.of[G.mul[g][h]] = k; });
  }
  return c;
}

bool is_normal(const SmallGroup& G, const Subset& N) {
  for (Index g = 0; g < G.order(); ++g) {
    bool ok = true;
    for_each_member(N, [&](Index n) {
      if (!N.test(G.mul[G.mul[g][n]][G.inv(g)])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Random preorder on n points as up-sets.
std::vector<Subset> random_preorder(Rng& rng, std::size_t n, double p) {
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) {
    up[i].set(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng, p)) up[i].set(j);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  return up;
}

/// Open groupoid topology on a model: per component a unit preorder and a
/// normal subgroup; (g,i,j) <= (g',i',j') iff g' in gN, i <= i', j <= j'.
void seed_structured(Rng& rng, const Model& m, PreorderClosure& cl, int carrier) {
  const auto& groups = small_groups();
  for (Index c = 0; c < m.comps.size(); ++c) {
    const auto& G = groups[m.comps[c].group];
    const std::size_t n = m.comps[c].n;
    auto P = random_preorder(rng, n, 0.3);
    std::vector<Subset> normals;
    for (auto& H : subgroups(m.comps[c].group))
      if (is_normal(G, H)) normals.push_back(H);
    const Subset N = coin(rng, 0.5) ? pick(rng, normals) : singleton(G.order(), 0);
    for (Index g = 0; g < G.order(); ++g)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          for_each_member(N, [&](Index k) {
            for_each_member(P[i], [&](Index i2) {
              for_each_member(P[j], [&](Index j2) {
                cl.relate(carrier, m.arrow(c, g, i, j), m.arrow(c, G.mul[g][k], i2, j2));
              });
            });
          });
  }
}

void seed_random(Rng& rng, PreorderClosure& cl, const std::vector<int>& carriers) {
  const std::size_t k = uniform(rng, 1, 2);
  for (std::size_t t = 0; t < k; ++t) {
    const int c = pick(rng, carriers);
    const std::size_t n = cl.size(c);
    if (n < 2) continue;
    const auto x = static_cast<Index>(uniform(rng, 0, n - 1));
    const auto y = static_cast<Index>(uniform(rng, 0, n - 1));
    if (x != y) cl.relate(c, x, y);
  }
}

GroupoidPtr retopologize(const GroupoidPtr& g, const PreorderClosure& cl, int carrier) {
  return std::make_shared<const Groupoid>(g->with_topology(cl.space(carrier, g->arrows().labels())));
}

ActionPtr retopologize(const Action& a, const GroupoidPtr& g, const PreorderClosure& cl,
                       int carrier) {
  return std::make_shared<const Action>(g, cl.space(carrier, a.space().labels()),
                                        a.anchor_table(), a.act_table());
}

/// Component shapes within the caps.
Model random_model(Rng& rng, std::size_t max_units, std::size_t max_arrows, bool bundle,
                   std::size_t max_comps = 3) {
  const auto& groups = small_groups();
  std::vector<Model::Comp> comps;
  std::size_t units = 0, arrows = 0;
  const std::size_t want = uniform(rng, 1, max_comps);
  for (std::size_t t = 0; t < want; ++t) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      // small groups are more common
      const auto gi = static_cast<Index>(coin(rng, 0.5) ? uniform(rng, 0, 2)
                                                        : uniform(rng, 0, groups.size() - 1));
      const std::size_t n = bundle ? 1 : uniform(rng, 1, 3);
      const std::size_t a = groups[gi].order() * n * n;
      if (units + n <= max_units && arrows + a <= max_arrows) {
        comps.push_back({gi, n});
        units += n;
        arrows += a;
        break;
      }
    }
  }
  if (comps.empty()) comps.push_back({0, 1});
  return Model(std::move(comps));
}

/// At least one orbit per component, then optional extras, within the caps.
std::vector<OrbitSpec> random_orbits(Rng& rng, const Model& m, std::size_t max_points,
                                     std::size_t max_orbits) {
  const auto& groups = small_groups();
  std::vector<OrbitSpec> out;
  max_points = std::max(max_points, m.unit_count());
  std::size_t reserved = m.unit_count();
  std::size_t used = 0;
  auto orbit_size = [&](Index c, const Subset& H) {
    return groups[m.comps[c].group].order() / popcount_mask(H) * m.comps[c].n;
  };
  for (Index c = 0; c < m.comps.size(); ++c) {
    reserved -= m.comps[c].n;
    auto subs = subgroups(m.comps[c].group);
    std::shuffle(subs.begin(), subs.end(), rng);
    for (auto& H : subs) {
      if (used + orbit_size(c, H) + reserved <= max_points) {
        out.push_back({c, H});
        used += orbit_size(c, H);
        break;
      }
    }
  }
  while (out.size() < max_orbits && coin(rng, 0.4)) {
    const auto c = static_cast<Index>(uniform(rng, 0, m.comps.size() - 1));
    const auto subs = subgroups(m.comps[c].group);
    const auto& H = pick(rng, subs);
    if (used + orbit_size(c, H) > max_points) break;
    out.push_back({c, H});
    used += orbit_size(c, H);
  }
  return out;
}

/// Functor data on a model: component map, homomorphism, unit map, gauge.
struct FunctorSpec {
  Index k;
  Table phi;
  std::vector<Index> u;
  std::vector<Index> b;
};

Table functor_table(const Model& src, const Model& tgt, const std::vector<FunctorSpec>& fs) {
  const auto& groups = small_groups();
  Table Psi(src.arrows);
  for (Index c = 0; c < src.comps.size(); ++c) {
    const auto& f = fs[c];
    const auto& H = groups[tgt.comps[f.k].group];
    const auto& G = groups[src.comps[c].group];
    const std::size_t n = src.comps[c].n;
    for (Index g = 0; g < G.order(); ++g)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          const Index h = H.mul[H.mul[f.b[i]][f.phi[g]]][H.inv(f.b[j])];
          Psi[src.arrow(c, g, i, j)] = tgt.arrow(f.k, h, f.u[i], f.u[j]);
        }
  }
  return Psi;
}

/// Theta = Psi^* Theta' on {(x, s') : psi(x) = rho'(s')}, f = pr2.
Action pullback_along_functor(const GroupoidPtr& g, const Action& target, std::span<const Index> Psi,
                              Table* f) {
  std::vector<std::pair<Index, Index>> pts;
  for (Index x : g->unit_list())
    for (Index s = 0; s < target.size(); ++s)
      if (target.anchor(s) == Psi[x]) pts.emplace_back(x, s);
  std::map<std::pair<Index, Index>, Index> pos;
  std::vector<std::string> labels;
  Table anchor;
  f->clear();
  for (Index p = 0; p < pts.size(); ++p) {
    pos[pts[p]] = p;
    labels.push_back(g->label(pts[p].first) + "|" + target.space().label(pts[p].second));
    anchor.push_back(pts[p].first);
    f->push_back(pts[p].second);
  }
  Table act(g->size() * pts.size(), kNone);
  for (Index xi = 0; xi < g->size(); ++xi)
    for (Index p = 0; p < pts.size(); ++p)
      if (g->d(xi) == pts[p].first)
        act[xi * pts.size() + p] = pos.at({g->r(xi), target.act(Psi[xi], pts[p].second)});
  return Action(g, FiniteSpace::discrete(pts.size(), std::move(labels)), std::move(anchor),
                std::move(act));
}

/// Random invariant subset of a that still meets every anchor fibre.
Subset invariant_cover(Rng& rng, const Action& a) {
  const auto orbs = orbits(a);
  Subset keep(a.size());
  Subset covered(a.gpd().size());
  for (Index o : shuffled(rng, orbs.size())) {
    Subset anchors(a.gpd().size());
    for_each_member(orbs[o], [&](Index s) { anchors.set(a.anchor(s)); });
    if (!anchors.is_subset_of(covered) || coin(rng, 0.3)) {
      keep |= orbs[o];
      covered |= anchors;
    }
  }
  return keep;
}

Table fold_table(std::size_t n) {
  Table f(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) f[i] = static_cast<Index>(i % n);
  return f;
}

void add_morphism_constraints(PreorderClosure& cl, int xa, int sa, int xb, int sb,
                              const ActionMorphism& m) {
  cl.add_groupoid(xa, m.source->gpd());
  cl.add_action(xa, sa, *m.source);
  cl.add_groupoid(xb, m.target->gpd());
  cl.add_action(xb, sb, *m.target);
  cl.add_unary(xa, xb, m.psi);
  cl.add_unary(sa, sb, m.f);
}

/// Applies a joint topology to a morphism; structured seeds go on the target.
ActionMorphism topologize_morphism(Rng& rng, Topo topo, const Model& src, const Model& tgt,
                                   ActionMorphism m) {
  if (topo == Topo::discrete) return m;
  PreorderClosure cl;
  const int xa = cl.add_carrier(m.source->gpd().size());
  const int sa = cl.add_carrier(m.source->size());
  const int xb = cl.add_carrier(m.target->gpd().size());
  const int sb = cl.add_carrier(m.target->size());
  add_morphism_constraints(cl, xa, sa, xb, sb, m);
  if (topo == Topo::structured) {
    seed_structured(rng, tgt, cl, xb);
    if (coin(rng, 0.5)) seed_structured(rng, src, cl, xa);
  } else {
    seed_random(rng, cl, {xa, sa, xb, sb});
  }
  cl.close();
  auto ga = retopologize(m.source->gpd_ptr(), cl, xa);
  auto gb = retopologize(m.target->gpd_ptr(), cl, xb);
  ActionMorphism out;
  out.source = retopologize(*m.source, ga, cl, sa);
  out.target = retopologize(*m.target, gb, cl, sb);
  out.psi = std::move(m.psi);
  out.f = std::move(m.f);
  return out;
}

ActionMorphism morphism_attempt(Rng& rng, const GenOptions& o, bool psi_injective,
                                Model* src_out = nullptr) {
  const auto& groups = small_groups();
  const bool bundle = o.steer == Steer::bundle;
  // a transitive target makes the transfer clauses bite
  const bool transitive = o.steer == Steer::surjective && coin(rng, 0.5);
  Model tgt = random_model(rng, o.max_units, o.max_arrows, bundle, transitive ? 1 : 3);
  auto tg = tgt.build();
  auto theta_t = std::make_shared<const Action>(
      orbit_action(tgt, tg, random_orbits(rng, tgt, o.max_points, transitive ? 1 : o.max_orbits)));

  std::vector<Model::Comp> comps;
  std::vector<FunctorSpec> fs;
  auto gauge = [&](Index k, std::size_t n) {
    std::vector<Index> b(n, 0);
    if (coin(rng, 0.5))
      for (auto& x : b) x = static_cast<Index>(uniform(rng, 0, groups[tgt.comps[k].group].order() - 1));
    return b;
  };
  auto hom_to = [&](Index G, Index H, bool bijective) -> Table {
    std::vector<Table> cands;
    for (const auto& h : homomorphisms(G, H))
      if (!bijective || is_injective(h)) cands.push_back(h);
    return pick(rng, cands);
  };

  const bool iso = o.steer == Steer::equality;
  const bool unit_bijection = iso || o.steer == Steer::eligible || o.steer == Steer::surjective;
  if (unit_bijection) {
    for (Index k = 0; k < tgt.comps.size(); ++k) {
      const std::size_t n = tgt.comps[k].n;
      Index G = tgt.comps[k].group;
      if (!iso && coin(rng, 0.5)) {
        // any group with a homomorphism into the target's; the trivial one always works
        G = static_cast<Index>(uniform(rng, 0, 2));
        if (groups[G].order() * n * n > o.max_arrows / std::max<std::size_t>(1, tgt.comps.size()))
          G = 0;
      }
      comps.push_back({G, n});
      auto u = shuffled(rng, n);
      fs.push_back({k, hom_to(G, tgt.comps[k].group, iso), u, gauge(k, n)});
    }
  } else {
    std::vector<std::size_t> free_units(tgt.comps.size());
    for (Index k = 0; k < tgt.comps.size(); ++k) free_units[k] = tgt.comps[k].n;
    const std::size_t want = uniform(rng, 1, 3);
    std::size_t arrows = 0;
    std::vector<std::vector<Index>> unused(tgt.comps.size());
    for (Index k = 0; k < tgt.comps.size(); ++k) unused[k] = shuffled(rng, tgt.comps[k].n);
    for (std::size_t t = 0; t < want; ++t) {
      const auto k = static_cast<Index>(uniform(rng, 0, tgt.comps.size() - 1));
      const std::size_t avail = psi_injective ? unused[k].size() : tgt.comps[k].n;
      if (avail == 0) continue;
      const std::size_t n = uniform(rng, 1, std::min<std::size_t>(avail, 3));
      const auto G = static_cast<Index>(uniform(rng, 0, 3));
      if (arrows + groups[G].order() * n * n > o.max_arrows) continue;
      arrows += groups[G].order() * n * n;
      std::vector<Index> u(n);
      for (auto& x : u) {
        if (psi_injective) {
          x = unused[k].back();
          unused[k].pop_back();
        } else {
          x = static_cast<Index>(uniform(rng, 0, tgt.comps[k].n - 1));
        }
      }
      comps.push_back({G, n});
      fs.push_back({k, hom_to(G, tgt.comps[k].group, false), u, gauge(k, n)});
    }
    if (comps.empty()) {
      comps.push_back({0, 1});
      fs.push_back({0, homomorphisms(0, tgt.comps[0].group).front(), {0}, {0}});
    }
  }
  Model src(std::move(comps));
  auto sg = src.build();
  Table Psi = functor_table(src, tgt, fs);
  Table f;
  Action theta = pullback_along_functor(sg, *theta_t, Psi, &f);
  if (theta.size() > 2 * o.max_points) throw Error("generator: source action too large");

  if (iso && coin(rng, 0.5)) {
    Table emb;
    auto keep = invariant_cover(rng, theta);
    theta = sub_action(theta, keep, &emb);
    f = compose(f, emb);
  } else if (!iso && !psi_injective && coin(rng, 0.3)) {
    Table emb;
    theta = sub_action(theta, invariant_cover(rng, theta), &emb);
    f = compose(f, emb);
  }
  if (o.steer == Steer::surjective && coin(rng, 0.3) && 2 * theta.size() <= 2 * o.max_points) {
    // double-and-fold keeps f surjective but not injective
    theta = action_sum(theta, theta);
    f = compose(f, fold_table(theta.size() / 2));
  }
  ActionMorphism m{std::make_shared<const Action>(std::move(theta)), theta_t, std::move(Psi),
                   std::move(f)};
  if (src_out) *src_out = src;
  return topologize_morphism(rng, o.topo, src, tgt, std::move(m));
}

template <class T, class Make, class Valid>
T retry(Make&& make, Valid&& valid, const char* what) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      T t = make(attempt);
      if (valid(t)) return t;
    } catch (const Error&) {
    }
  }
  throw Error(std::string("generator: no valid ") + what + " found");
}

}  // namespace

Index SmallGroup::inv(Index g) const {
  for (Index h = 0; h < order(); ++h)
    if (mul[g][h] == 0) return h;
  throw Error("group element without inverse");
}

const std::vector<SmallGroup>& small_groups() {
  static const std::vector<SmallGroup> groups = [] {
    std::vector<SmallGroup> v;
    for (std::size_t n = 1; n <= 6; ++n) v.push_back(cyclic(n));
    v.push_back(klein());
    v.push_back(symmetric3());
    return v;
  }();
  return groups;
}

Index group_index(const std::string& name) {
  const auto& g = small_groups();
  for (Index i = 0; i < g.size(); ++i)
    if (g[i].name == name) return i;
  throw Error("unknown group: " + name);
}

std::vector<Subset> subgroups(Index group) {
  const auto& G = small_groups()[group];
  const std::size_t n = G.order();
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    Subset s(n, mask);
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a)
      for (Index b = 0; b < n && closed; ++b)
        if (s.test(a) && s.test(b) && !s.test(G.mul[a][b])) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

const std::vector<Table>& homomorphisms(Index Gi, Index Hi) {
  static const auto all = [] {
    const auto& groups = small_groups();
    std::vector<std::vector<std::vector<Table>>> res(groups.size(),
                                                     std::vector<std::vector<Table>>(groups.size()));
    for (Index a = 0; a < groups.size(); ++a) {
      for (Index b = 0; b < groups.size(); ++b) {
        const auto& G = groups[a];
        const auto& H = groups[b];
        Table phi(G.order(), kNone);
        phi[0] = 0;
        auto consistent = [&](Index upto) {
          for (Index x = 0; x <= upto; ++x)
            for (Index y = 0; y <= upto; ++y) {
              const Index z = G.mul[x][y];
              if (z <= upto && phi[z] != H.mul[phi[x]][phi[y]]) return false;
            }
          return true;
        };
        auto rec = [&](auto&& self, Index g) -> void {
          if (g == G.order()) {
            res[a][b].push_back(phi);
            return;
          }
          for (Index h = 0; h < H.order(); ++h) {
            phi[g] = h;
            if (consistent(g)) self(self, g + 1);
          }
          phi[g] = kNone;
        };
        if (consistent(0)) rec(rec, 1);
      }
    }
    return res;
  }();
  return all[Gi][Hi];
}

Model::Model(std::vector<Comp> c) : comps(std::move(c)) {
  const auto& groups = small_groups();
  for (const auto& comp : comps) {
    offset.push_back(static_cast<Index>(arrows));
    arrows += groups[comp.group].order() * comp.n * comp.n;
  }
}

Index Model::arrow(Index c, Index g, Index i, Index j) const {
  const std::size_t n = comps[c].n;
  return static_cast<Index>(offset[c] + g * n * n + i * n + j);
}

std::size_t Model::unit_count() const {
  std::size_t u = 0;
  for (const auto& c : comps) u += c.n;
  return u;
}

GroupoidPtr Model::build() const {
  const auto& groups = small_groups();
  Table src(arrows), rng(arrows), inv(arrows), mul(arrows * arrows, kNone);
  Subset units(arrows);
  std::vector<std::string> labels(arrows);
  for (Index c = 0; c < comps.size(); ++c) {
    const auto& G = groups[comps[c].group];
    const std::size_t n = comps[c].n;
    for (Index g = 0; g < G.order(); ++g) {
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          const Index a = arrow(c, g, i, j);
          src[a] = unit(c, j);
          rng[a] = unit(c, i);
          inv[a] = arrow(c, G.inv(g), j, i);
          if (g == 0 && i == j) units.set(a);
          std::string name(1, static_cast<char>('A' + c));
          name += g == 0 ? "e" : "g" + std::to_string(g);
          labels[a] = name + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
          for (Index h = 0; h < G.order(); ++h)
            for (Index k = 0; k < n; ++k) mul[a * arrows + arrow(c, h, j, k)] = arrow(c, G.mul[g][h], i, k);
        }
      }
    }
  }
  return std::make_shared<const Groupoid>(FiniteSpace::discrete(arrows, std::move(labels)),
                                          std::move(units), std::move(src), std::move(rng),
                                          std::move(inv), std::move(mul));
}

Action orbit_action(const Model& m, const GroupoidPtr& g, const std::vector<OrbitSpec>& orbits,
                    std::vector<std::array<Index, 3>>* point_info) {
  const auto& groups = small_groups();
  std::vector<std::array<Index, 3>> info;
  std::vector<Cosets> cs;
  std::vector<Index> first;
  for (Index o = 0; o < orbits.size(); ++o) {
    const auto& comp = m.comps[orbits[o].comp];
    cs.push_back(cosets(groups[comp.group], orbits[o].H));
    first.push_back(static_cast<Index>(info.size()));
    for (Index k = 0; k < cs.back().rep.size(); ++k)
      for (Index i = 0; i < comp.n; ++i) info.push_back({o, k, i});
  }
  const std::size_t np = info.size();
  Table anchor(np);
  std::vector<std::string> labels(np);
  Table act(g->size() * np, kNone);
  for (Index p = 0; p < np; ++p) {
    const auto [o, k, j] = info[p];
    const Index c = orbits[o].comp;
    const auto& G = groups[m.comps[c].group];
    const std::size_t n = m.comps[c].n;
    anchor[p] = m.unit(c, j);
    labels[p] = "s" + std::to_string(o) + "." + std::to_string(k) + "." + std::to_string(j);
    for (Index h = 0; h < G.order(); ++h) {
      const Index k2 = cs[o].of[G.mul[h][cs[o].rep[k]]];
      for (Index i = 0; i < n; ++i)
        act[m.arrow(c, h, i, j) * np + p] = static_cast<Index>(first[o] + k2 * n + i);
    }
  }
  if (point_info) *point_info = std::move(info);
  return Action(g, FiniteSpace::discrete(np, std::move(labels)), std::move(anchor), std::move(act));
}

int PreorderClosure::add_carrier(std::size_t n) {
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  up_.push_back(std::move(up));
  return static_cast<int>(up_.size() - 1);
}

int PreorderClosure::add_carrier(const FiniteSpace& s) {
  up_.push_back(s.neighborhoods());
  return static_cast<int>(up_.size() - 1);
}

void PreorderClosure::add_unary(int from, int to, Table f) {
  unary_.push_back({from, to, std::move(f)});
}

void PreorderClosure::add_binary(int a, int b, int to, Table f) {
  binary_.push_back({a, b, to, std::move(f)});
}

void PreorderClosure::relate(int carrier, Index x, Index y) { up_[carrier][x].set(y); }

void PreorderClosure::close() {
  bool changed = true;
  auto add = [&](int c, Index x, Index y) {
    if (!up_[c][x].test(y)) {
      up_[c][x].set(y);
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (auto& up : up_) {
      for (auto& ux : up) {
        Subset acc = ux;
        for_each_member(ux, [&](Index y) { acc |= up[y]; });
        if (acc != ux) {
          ux = std::move(acc);
          changed = true;
        }
      }
    }
    for (const auto& u : unary_) {
      for (Index x = 0; x < u.f.size(); ++x) {
        if (u.f[x] == kNone) continue;
        for_each_member(up_[u.from][x], [&](Index y) {
          if (u.f[y] != kNone) add(u.to, u.f[x], u.f[y]);
        });
      }
    }
    for (const auto& b : binary_) {
      const std::size_t na = up_[b.a].size(), nb = up_[b.b].size();
      for (Index x = 0; x < na; ++x) {
        for (Index y = 0; y < nb; ++y) {
          const Index v = b.f[x * nb + y];
          if (v == kNone) continue;
          for_each_member(up_[b.a][x], [&](Index x2) {
            for_each_member(up_[b.b][y], [&](Index y2) {
              const Index w = b.f[x2 * nb + y2];
              if (w != kNone) add(b.to, v, w);
            });
          });
        }
      }
    }
  }
}

FiniteSpace PreorderClosure::space(int carrier, std::vector<std::string> labels) const {
  return FiniteSpace::from_neighborhoods(up_[carrier], std::move(labels));
}

void PreorderClosure::add_groupoid(int arrows, const Groupoid& g) {
  add_unary(arrows, arrows, g.src());
  add_unary(arrows, arrows, g.rng());
  add_unary(arrows, arrows, g.inv_table());
  add_binary(arrows, arrows, arrows, g.mul_table());
}

void PreorderClosure::add_action(int arrows, int sigma, const Action& a) {
  add_unary(sigma, arrows, a.anchor_table());
  add_binary(arrows, sigma, sigma, a.act_table());
}

GroupoidPtr gen_groupoid(Rng& rng, const GenOptions& o) {
  return retry<GroupoidPtr>(
      [&](int attempt) {
        Model m = random_model(rng, o.max_units, o.max_arrows, o.steer == Steer::bundle);
        auto g = m.build();
        Topo topo = o.topo;
        if (o.steer == Steer::open_nondiscrete) topo = Topo::structured;
        if (o.steer == Steer::nonopen) topo = Topo::random;
        if (topo == Topo::discrete || attempt == 63) return g;
        PreorderClosure cl;
        const int x = cl.add_carrier(g->size());
        cl.add_groupoid(x, *g);
        if (topo == Topo::structured) seed_structured(rng, m, cl, x);
        else seed_random(rng, cl, {x});
        cl.close();
        return retopologize(g, cl, x);
      },
      [&](const GroupoidPtr& g) {
        if (validate_groupoid(*g)) return false;
        if (o.steer == Steer::open_nondiscrete)
          return is_open_groupoid(*g) && !g->arrows().is_discrete();
        if (o.steer == Steer::nonopen) return !is_open_groupoid(*g);
        return true;
      },
      "groupoid");
}

ActionPtr gen_action(Rng& rng, const GenOptions& o) {
  return retry<ActionPtr>(
      [&](int attempt) {
        Model m = random_model(rng, o.max_units, o.max_arrows, o.steer == Steer::bundle);
        auto g = m.build();
        Action a = orbit_action(m, g, random_orbits(rng, m, o.max_points, o.max_orbits));
        Topo topo = o.topo;
        if (o.steer == Steer::open_nondiscrete) topo = Topo::structured;
        if (topo == Topo::discrete || attempt == 63) return std::make_shared<const Action>(a);
        PreorderClosure cl;
        const int x = cl.add_carrier(g->size());
        const int s = cl.add_carrier(a.size());
        cl.add_groupoid(x, *g);
        cl.add_action(x, s, a);
        if (topo == Topo::structured) {
          seed_structured(rng, m, cl, x);
          if (coin(rng, 0.3)) seed_random(rng, cl, {s});
        } else {
          seed_random(rng, cl, {x, s});
        }
        cl.close();
        auto g2 = retopologize(g, cl, x);
        return retopologize(a, g2, cl, s);
      },
      [&](const ActionPtr& a) {
        if (validate_groupoid(a->gpd()) || validate_action(*a)) return false;
        if (o.steer == Steer::open_nondiscrete)
          return is_open_groupoid(a->gpd()) &&
                 !(a->gpd().arrows().is_discrete() && a->space().is_discrete());
        return true;
      },
      "action");
}

ActionMorphism gen_morphism(Rng& rng, const GenOptions& o) {
  return retry<ActionMorphism>(
      [&](int attempt) {
        GenOptions oo = o;
        if (attempt == 63) oo.topo = Topo::discrete;
        return morphism_attempt(rng, oo, false);
      },
      [&](const ActionMorphism& m) {
        if (validate_morphism(m)) return false;
        if (o.steer == Steer::eligible)
          return is_homeomorphism(m.source->gpd().unit_space(), m.target->gpd().unit_space(),
                                  unit_map_positions(m.source->gpd(), m.target->gpd(), m.psi));
        if (o.steer == Steer::equality)
          return is_surjective(m.psi, m.target->gpd().size()) &&
                 is_injective(m.psi_units()) && is_injective(m.f);
        if (o.steer == Steer::surjective) return is_surjective(m.f, m.target->size());
        return true;
      },
      "morphism");
}

namespace {

GVMOfActions gvm_attempt(Rng& rng, const GenOptions& o, bool discrete_only) {
  GenOptions mo = o;
  mo.max_units = std::min<std::size_t>(o.max_units, 4);
  mo.max_arrows = std::min<std::size_t>(o.max_arrows, 24);
  mo.max_points = std::min<std::size_t>(o.max_points, 6);
  mo.topo = Topo::discrete;
  // eligible here means single copies over an isomorphism
  if (o.steer == Steer::eligible) mo.steer = Steer::equality;
  ActionMorphism m = morphism_attempt(rng, mo, o.steer != Steer::surjective);
  if (!is_injective(m.psi_units())) throw Error("generator: psi not injective");
  const Groupoid& G = m.source->gpd();
  const Groupoid& H = m.target->gpd();

  const bool single = o.steer == Steer::eligible;
  const bool equal_copies = o.steer == Steer::equality;
  // A: copies per unit of Xi; A': copies per unit of Xi'
  std::vector<Index> pi, pi_p;
  std::vector<std::vector<Index>> copies_of(G.size()), copies_p(H.size());
  for (Index x : H.unit_list()) {
    const std::size_t c = single ? 1 : uniform(rng, 1, 2);
    for (std::size_t t = 0; t < c; ++t) {
      copies_p[x].push_back(static_cast<Index>(pi_p.size()));
      pi_p.push_back(x);
    }
  }
  const Table psi = m.psi;
  for (Index x : G.unit_list()) {
    const std::size_t c =
        equal_copies ? copies_p[psi[x]].size() : (single ? 1 : uniform(rng, 1, 2));
    for (std::size_t t = 0; t < c; ++t) {
      copies_of[x].push_back(static_cast<Index>(pi.size()));
      pi.push_back(x);
    }
  }
  Table gamma(pi.size());
  for (Index x : G.unit_list()) {
    const auto& tgt = copies_p[psi[x]];
    for (std::size_t t = 0; t < copies_of[x].size(); ++t)
      gamma[copies_of[x][t]] = equal_copies ? tgt[t] : tgt[uniform(rng, 0, tgt.size() - 1)];
  }

  FiniteSpace A = FiniteSpace::discrete(pi.size());
  FiniteSpace Ap = FiniteSpace::discrete(pi_p.size());
  ActionPtr src = m.source, tgt = m.target;
  if (!discrete_only && o.topo != Topo::discrete) {
    PreorderClosure cl;
    const int xa = cl.add_carrier(G.size());
    const int sa = cl.add_carrier(src->size());
    const int xb = cl.add_carrier(H.size());
    const int sb = cl.add_carrier(tgt->size());
    const int ca = cl.add_carrier(pi.size());
    const int cb = cl.add_carrier(pi_p.size());
    add_morphism_constraints(cl, xa, sa, xb, sb, m);
    cl.add_unary(ca, xa, pi);
    cl.add_unary(cb, xb, pi_p);
    cl.add_unary(ca, cb, gamma);
    seed_random(rng, cl, {xa, sa, xb, sb, ca, cb});
    cl.close();
    auto ga = retopologize(src->gpd_ptr(), cl, xa);
    auto gb = retopologize(tgt->gpd_ptr(), cl, xb);
    src = retopologize(*src, ga, cl, sa);
    tgt = retopologize(*tgt, gb, cl, sb);
    A = cl.space(ca, {});
    Ap = cl.space(cb, {});
  }
  std::vector<std::string> la, lb;
  for (Index a = 0; a < pi.size(); ++a) la.push_back("a" + std::to_string(a));
  for (Index a = 0; a < pi_p.size(); ++a) lb.push_back("b" + std::to_string(a));
  A.set_labels(la);
  Ap.set_labels(lb);

  auto pb = build_pullback(src->gpd_ptr(), A, pi);
  auto pbp = build_pullback(tgt->gpd_ptr(), Ap, pi_p);

  // optional gauge from the pointwise stabilizer of f(Sigma_x) in the isotropy at psi(x)
  Table t(pi.size());
  const bool use_gauge = coin(rng, 0.5);
  for (Index a = 0; a < pi.size(); ++a) {
    const Index x = pi[a];
    const Index y = psi[x];
    t[a] = y;
    if (!use_gauge) continue;
    std::vector<Index> stab;
    for_each_member(isotropy(H, y), [&](Index k) {
      bool fixes = true;
      for_each_member(src->fiber(x), [&](Index s) {
        if (tgt->act(k, m.f[s]) != m.f[s]) fixes = false;
      });
      if (fixes) stab.push_back(k);
    });
    t[a] = pick(rng, stab);
  }
  Table Gamma(pb.triples.size());
  for (Index p = 0; p < pb.triples.size(); ++p) {
    const auto [a, xi, b] = pb.triples[p];
    const Index mid = H.mul(H.mul(t[a], psi[xi]), H.inv(t[b]));
    Gamma[p] = pbp.find(gamma[a], mid, gamma[b]);
    if (Gamma[p] == kNone) throw Error("generator: gauge left the pullback");
  }
  return make_gvm_action(src, tgt, A, pi, Ap, pi_p, gamma, Gamma, m.f);
}

}  // namespace

GVMOfActions gen_gvm_action(Rng& rng, const GenOptions& o) {
  return retry<GVMOfActions>(
      [&](int attempt) { return gvm_attempt(rng, o, attempt >= 48); },
      [&](const GVMOfActions& va) {
        if (validate_gvm_action(va)) return false;
        if (o.steer == Steer::equality) return equality_hypotheses(va);
        if (o.steer == Steer::eligible) return equality_hypotheses(va) && is_injective(va.gvm.pb.pi);
        if (o.steer == Steer::surjective) return is_surjective(va.h, va.target->size());
        return true;
      },
      "gvm action");
}

namespace {

/// Cocycle construction of an actor: every target component is a product of
/// a group G'_k with the pair groupoid on a union of source orbits.
struct ActorBuild {
  Model src, tgt;
  GroupoidPtr sg, tg;
  Actor phi;
};

ActorBuild actor_model(Rng& rng, const GenOptions& o) {
  const auto& groups = small_groups();
  const bool saturating = o.steer == Steer::equality || o.steer == Steer::open_nondiscrete;
  const bool eligible = o.steer == Steer::eligible;
  ActorBuild out;
  out.src = random_model(rng, 3, 18, o.steer == Steer::bundle, o.max_orbits == 1 ? 1 : 2);
  const Model& src = out.src;

  struct Orb {
    Index comp;
    Subset H;
    Cosets cs;
    std::size_t size;
  };
  std::vector<Orb> orbs;
  std::size_t units = 0;
  for (Index c = 0; c < src.comps.size(); ++c) {
    const auto& G = groups[src.comps[c].group];
    auto subs = subgroups(src.comps[c].group);
    const bool extra = !eligible && !saturating && o.max_orbits != 1 && coin(rng, 0.3);
    for (int t = 0; t < (extra ? 2 : 1); ++t) {
      Subset H = full_set(G.order());
      if (!eligible && !saturating && coin(rng, 0.5)) H = pick(rng, subs);
      const std::size_t sz = G.order() / H.count() * src.comps[c].n;
      if (units + sz > o.max_units) H = full_set(G.order());
      const std::size_t sz2 = G.order() / H.count() * src.comps[c].n;
      if (t > 0 && units + sz2 > o.max_units) break;
      orbs.push_back({c, H, cosets(G, H), sz2});
      units += sz2;
    }
  }
  // partition orbits into target components
  std::vector<std::vector<Index>> parts;
  for (Index i : shuffled(rng, orbs.size())) {
    if (parts.empty() || saturating || coin(rng, 0.5)) parts.push_back({i});
    else parts[uniform(rng, 0, parts.size() - 1)].push_back(i);
  }
  std::vector<Model::Comp> tcomps;
  std::vector<Table> phis;  // per orbit
  phis.resize(orbs.size());
  std::size_t arrows = 0;
  for (const auto& part : parts) {
    std::size_t m = 0;
    for (Index i : part) m += orbs[i].size;
    Index Gk = 0;
    for (int attempt = 0; attempt < 6; ++attempt) {
      const auto cand = static_cast<Index>(uniform(rng, 0, 3));
      if (arrows + groups[cand].order() * m * m > o.max_arrows) continue;
      if (saturating) {
        bool surj = false;
        for (const auto& h : homomorphisms(src.comps[orbs[part[0]].comp].group, cand))
          if (is_surjective(h, groups[cand].order())) surj = true;
        if (!surj) continue;
      }
      Gk = cand;
      break;
    }
    arrows += groups[Gk].order() * m * m;
    tcomps.push_back({Gk, m});
    for (Index i : part) {
      std::vector<Table> cands;
      for (const auto& h : homomorphisms(src.comps[orbs[i].comp].group, Gk))
        if (!saturating || is_surjective(h, groups[Gk].order())) cands.push_back(h);
      phis[i] = pick(rng, cands);
    }
  }
  out.tgt = Model(std::move(tcomps));
  const Model& tgt = out.tgt;
  out.sg = src.build();
  out.tg = tgt.build();

  // target unit (k, u) <-> (orbit, coset, i)
  std::vector<Index> orbit_comp(orbs.size()), orbit_base(orbs.size());
  for (Index k = 0; k < parts.size(); ++k) {
    Index base = 0;
    for (Index i : parts[k]) {
      orbit_comp[i] = k;
      orbit_base[i] = base;
      base += static_cast<Index>(orbs[i].size);
    }
  }
  std::vector<std::vector<Index>> b(tgt.comps.size());
  for (Index k = 0; k < tgt.comps.size(); ++k) {
    b[k].assign(tgt.comps[k].n, 0);
    if (coin(rng, 0.5))
      for (auto& x : b[k]) x = static_cast<Index>(uniform(rng, 0, groups[tgt.comps[k].group].order() - 1));
  }
  // target arrows of component k: (h, u, v)
  const std::size_t nt = out.tg->size();
  Table mu(nt);
  Table diamond(out.sg->size() * nt, kNone);
  for (Index o_ = 0; o_ < orbs.size(); ++o_) {
    const auto& orb = orbs[o_];
    const Index c = orb.comp, k = orbit_comp[o_];
    const auto& G = groups[src.comps[c].group];
    const auto& Gk = groups[tgt.comps[k].group];
    const std::size_t n = src.comps[c].n, m = tgt.comps[k].n;
    auto unit_of = [&](Index coset, Index i) { return static_cast<Index>(orbit_base[o_] + coset * n + i); };
    for (Index coset = 0; coset < orb.cs.rep.size(); ++coset) {
      for (Index j = 0; j < n; ++j) {
        const Index x = unit_of(coset, j);  // unit x' with nu(x') = (c, j)
        for (Index h = 0; h < Gk.order(); ++h)
          for (Index v = 0; v < m; ++v) mu[tgt.arrow(k, h, x, v)] = src.unit(c, j);
        for (Index g = 0; g < G.order(); ++g) {
          const Index coset2 = orb.cs.of[G.mul[g][orb.cs.rep[coset]]];
          for (Index i = 0; i < n; ++i) {
            const Index y = unit_of(coset2, i);
            const Index cg = Gk.mul[Gk.mul[b[k][y]][phis[o_][g]]][Gk.inv(b[k][x])];
            // F(xi, x') = (cg, y, x); xi . eta' = F eta'
            for (Index h = 0; h < Gk.order(); ++h)
              for (Index v = 0; v < m; ++v)
                diamond[src.arrow(c, g, i, j) * nt + tgt.arrow(k, h, x, v)] =
                    tgt.arrow(k, Gk.mul[cg][h], y, v);
          }
        }
      }
    }
  }
  bool nu_onto = true;
  {
    Subset hit(out.sg->size());
    for (Index x : out.tg->unit_list()) hit.set(mu[x]);
    for (Index x : out.sg->unit_list()) nu_onto = nu_onto && hit.test(x);
  }
  out.phi = Actor{out.sg, out.tg, std::move(mu), std::move(diamond), nu_onto};
  return out;
}

void add_actor_constraints(PreorderClosure& cl, int xs, int xt, const Actor& phi) {
  cl.add_groupoid(xs, *phi.source);
  cl.add_groupoid(xt, *phi.target);
  cl.add_unary(xt, xs, phi.mu);
  cl.add_binary(xs, xt, xt, phi.diamond);
}

Actor retopologize_actor(const Actor& phi, const PreorderClosure& cl, int xs, int xt) {
  Actor out = phi;
  out.source = retopologize(phi.source, cl, xs);
  out.target = retopologize(phi.target, cl, xt);
  return out;
}

Actor actor_attempt(Rng& rng, const GenOptions& o, bool discrete_only) {
  auto ab = actor_model(rng, o);
  Topo topo = o.topo;
  if (o.steer == Steer::open_nondiscrete) topo = Topo::structured;
  if (discrete_only || topo == Topo::discrete) return ab.phi;
  PreorderClosure cl;
  const int xs = cl.add_carrier(ab.sg->size());
  const int xt = cl.add_carrier(ab.tg->size());
  add_actor_constraints(cl, xs, xt, ab.phi);
  if (topo == Topo::structured) seed_structured(rng, ab.src, cl, xs);
  else seed_random(rng, cl, {xs, xt});
  cl.close();
  return retopologize_actor(ab.phi, cl, xs, xt);
}

ActorOfActions actor_action_attempt(Rng& rng, const GenOptions& o, bool discrete_only) {
  GenOptions ao = o;
  ao.topo = Topo::discrete;
  const bool transitive = o.steer == Steer::surjective && coin(rng, 0.5);
  if (o.steer == Steer::surjective) ao.steer = Steer::none;
  if (transitive) ao.max_orbits = 1;
  auto ab = actor_model(rng, ao);
  const Actor& phi = ab.phi;
  const std::size_t nt = ab.tg->size();
  const std::size_t cap = o.steer == Steer::surjective ? 4 : 6;
  Action theta_t = orbit_action(ab.tgt, ab.tg, random_orbits(rng, ab.tgt, cap, transitive ? 1 : 4));
  // Theta on Sigma' through the actor: rho = nu o rho', xi . s = (xi . rho'(s)) .' s
  const std::size_t np = theta_t.size();
  Table anchor(np), act(ab.sg->size() * np, kNone);
  std::vector<std::string> labels;
  for (Index s = 0; s < np; ++s) {
    anchor[s] = phi.mu[theta_t.anchor(s)];
    labels.push_back("t" + theta_t.space().label(s));
  }
  for (Index xi = 0; xi < ab.sg->size(); ++xi)
    for (Index s = 0; s < np; ++s)
      if (ab.sg->d(xi) == anchor[s])
        act[xi * np + s] = theta_t.act(phi.diamond[xi * nt + theta_t.anchor(s)], s);
  Action theta(ab.sg, FiniteSpace::discrete(np, std::move(labels)), std::move(anchor),
               std::move(act));
  Table g = identity_table(np);
  if (o.steer == Steer::surjective || (o.steer == Steer::none && coin(rng, 0.3))) {
    if (coin(rng, 0.5)) {
      theta = action_sum(theta, theta);
      g = fold_table(np);
    }
  } else if (o.steer == Steer::none && coin(rng, 0.3)) {
    Table emb;
    theta = sub_action(theta, invariant_cover(rng, theta), &emb);
    g = emb;
  }
  ActorOfActions pa{phi, std::make_shared<const Action>(std::move(theta)),
                    std::make_shared<const Action>(std::move(theta_t)), std::move(g)};
  Topo topo = o.topo;
  if (o.steer == Steer::open_nondiscrete) topo = Topo::structured;
  if (discrete_only || topo == Topo::discrete) return pa;

  PreorderClosure cl;
  const int xs = cl.add_carrier(ab.sg->size());
  const int xt = cl.add_carrier(nt);
  const int ss = cl.add_carrier(pa.source->size());
  const int st = cl.add_carrier(pa.target->size());
  add_actor_constraints(cl, xs, xt, phi);
  cl.add_action(xs, ss, *pa.source);
  cl.add_action(xt, st, *pa.target);
  cl.add_unary(ss, st, pa.g);
  if (topo == Topo::structured) seed_structured(rng, ab.src, cl, xs);
  else seed_random(rng, cl, {xs, xt, ss, st});
  cl.close();
  ActorOfActions out;
  out.actor = retopologize_actor(phi, cl, xs, xt);
  out.source = retopologize(*pa.source, out.actor.source, cl, ss);
  out.target = retopologize(*pa.target, out.actor.target, cl, st);
  out.g = pa.g;
  return out;
}

}  // namespace

Actor gen_actor(Rng& rng, const GenOptions& o) {
  return retry<Actor>(
      [&](int attempt) { return actor_attempt(rng, o, attempt >= 48); },
      [&](const Actor& phi) {
        if (validate_groupoid(*phi.source) || validate_groupoid(*phi.target) ||
            validate_actor(phi))
          return false;
        if (o.steer == Steer::open_nondiscrete)
          return is_open_groupoid(*phi.source) && !phi.source->arrows().is_discrete();
        return true;
      },
      "actor");
}

ActorOfActions gen_actor_action(Rng& rng, const GenOptions& o) {
  return retry<ActorOfActions>(
      [&](int attempt) { return actor_action_attempt(rng, o, attempt >= 48); },
      [&](const ActorOfActions& pa) {
        if (validate_actor_of_actions(pa)) return false;
        if (o.steer == Steer::equality) return saturates(pa) && is_injective(pa.g);
        if (o.steer == Steer::surjective) return is_surjective(pa.g, pa.target->size());
        if (o.steer == Steer::eligible) {
          const auto& X = *pa.actor.source;
          const auto& Xp = *pa.actor.target;
          if (X.unit_count() != Xp.unit_count()) return false;
          Table nu;
          for (Index x : Xp.unit_list()) nu.push_back(X.unit_position(pa.actor.mu[x]));
          return is_homeomorphism(Xp.unit_space(), X.unit_space(), nu);
        }
        return true;
      },
      "actor of actions");
}

Instance generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  GenOptions o;
  o.topo = spec.topo;
  const auto& k = spec.kind;
  auto topologize_groupoid = [&](GroupoidPtr g) -> GroupoidPtr {
    if (spec.topo == Topo::discrete) return g;
    return retry<GroupoidPtr>(
        [&](int) {
          PreorderClosure cl;
          const int x = cl.add_carrier(g->size());
          cl.add_groupoid(x, *g);
          seed_random(rng, cl, {x});
          cl.close();
          return retopologize(g, cl, x);
        },
        [](const GroupoidPtr& h) { return !validate_groupoid(*h); }, "groupoid");
  };
  auto group_of = [&]() {
    return spec.group.empty() ? static_cast<Index>(uniform(rng, 1, small_groups().size() - 1))
                              : group_index(spec.group);
  };
  if (k == "trivial") {
    const std::size_t n = spec.units ? spec.units : uniform(rng, 1, 4);
    return topologize_groupoid(std::make_shared<const Groupoid>(trivial_groupoid(FiniteSpace::discrete(n))));
  }
  if (k == "pair") {
    const std::size_t n = spec.units ? spec.units : uniform(rng, 1, 4);
    return topologize_groupoid(std::make_shared<const Groupoid>(pair_groupoid(n)));
  }
  if (k == "group") {
    return topologize_groupoid(std::make_shared<const Groupoid>(group_groupoid(small_groups()[group_of()].mul)));
  }
  if (k == "group_bundle") {
    const std::size_t n = spec.units ? spec.units : uniform(rng, 1, 4);
    std::vector<Model::Comp> comps;
    for (std::size_t i = 0; i < n; ++i)
      comps.push_back({spec.group.empty() ? static_cast<Index>(uniform(rng, 0, 3)) : group_index(spec.group), 1});
    return topologize_groupoid(Model(std::move(comps)).build());
  }
  if (k == "transformation") {
    const Index G = group_of();
    Model m({{G, 1}});
    auto g = m.build();
    std::vector<OrbitSpec> orbs;
    const auto subs = subgroups(G);
    // the free orbit first, then optional extra orbits
    orbs.push_back({0, singleton(small_groups()[G].order(), 0)});
    std::size_t pts = small_groups()[G].order();
    while (coin(rng, 0.4)) {
      const auto& H = pick(rng, subs);
      const std::size_t sz = small_groups()[G].order() / H.count();
      if (pts + sz > 8) break;
      orbs.push_back({0, H});
      pts += sz;
    }
    if (spec.units == 1) orbs.resize(1);
    return std::make_shared<const Action>(orbit_action(m, g, orbs));
  }
  if (k == "pullback_of") {
    o.max_units = 3;
    o.max_arrows = 12;
    auto g = gen_groupoid(rng, o);
    Table pi;
    for (Index x : g->unit_list()) {
      const std::size_t c = uniform(rng, 1, 2);
      for (std::size_t t = 0; t < c; ++t) pi.push_back(x);
    }
    return build_pullback(g, FiniteSpace::discrete(pi.size()), pi).realized;
  }
  if (k == "random_topologized") {
    o.topo = Topo::random;
    return gen_groupoid(rng, o);
  }
  if (k == "groupoid") return gen_groupoid(rng, o);
  if (k == "action") return gen_action(rng, o);
  if (k == "morphism" || k == "action_morphism") return gen_morphism(rng, o);
  if (k == "gvm_action") return gen_gvm_action(rng, o);
  if (k == "actor") return gen_actor(rng, o);
  if (k == "actor_action") return gen_actor_action(rng, o);
  throw Error("unknown generator kind: " + k);
}

}  // namespace gd
