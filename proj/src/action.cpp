#include "gd/action.hpp"

#include <random>

#include "gd/sweep.hpp"

namespace gd {

Action::Action(GroupoidPtr gpd, FiniteSpace space, Table anchor, Table act)
    : gpd_(std::move(gpd)), space_(std::move(space)), anchor_(std::move(anchor)), act_(std::move(act)) {
  if (!gpd_) throw Error("action: null groupoid");
  check_table(anchor_, space_.size(), gpd_->size(), "action anchor");
  if (act_.size() != gpd_->size() * space_.size()) throw Error("action: act table has wrong size");
  for (Index v : act_) {
    if (v != kNone && v >= space_.size()) throw Error("action: act entry out of range");
  }
}

Action Action::from_triples(GroupoidPtr gpd, FiniteSpace space, Table anchor,
                            const std::vector<std::array<Index, 3>>& act) {
  if (!gpd) throw Error("action: null groupoid");
  const std::size_t n = gpd->size(), m = space.size();
  check_table(anchor, m, n, "action anchor");
  Table dense(n * m, kNone);
  for (const auto& [xi, s, t] : act) {
    if (xi >= n || s >= m || t >= m) throw Error("action: act entry out of range");
    if (gpd->d(xi) != anchor[s]) {
      throw Error("action: act entry for non-admissible pair (" + std::to_string(xi) + "," +
                  std::to_string(s) + ")");
    }
    if (dense[xi * m + s] != kNone) throw Error("action: duplicate act entry");
    dense[xi * m + s] = t;
  }
  for (Index xi = 0; xi < n; ++xi) {
    for (Index s = 0; s < m; ++s) {
      if (gpd->d(xi) == anchor[s] && dense[xi * m + s] == kNone) {
        throw Error("action: act missing admissible pair (" + std::to_string(xi) + "," +
                    std::to_string(s) + ")");
      }
    }
  }
  return Action(std::move(gpd), std::move(space), std::move(anchor), std::move(dense));
}

Subset Action::fiber(Index x) const {
  Subset out(size());
  for (Index s = 0; s < size(); ++s) {
    if (anchor_[s] == x) out.set(s);
  }
  return out;
}

Action Action::with_topology(FiniteSpace space) const {
  if (space.size() != size()) throw Error("with_topology: size mismatch");
  space.set_labels(space_.labels());
  return Action(gpd_, std::move(space), anchor_, act_);
}

Report validate_action(const Action& a, bool require_surjective_anchor) {
  const Groupoid& g = a.gpd();
  const auto& sp = a.space();
  auto pl = [&](Index s) { return sp.label(s); };
  for (Index s = 0; s < a.size(); ++s) {
    if (!g.is_unit(a.anchor(s))) return Violation{"anchor_units", "sigma=" + pl(s)};
  }
  if (require_surjective_anchor) {
    const Subset hit = image(a.anchor_table(), full_set(a.size()), g.size());
    if (hit != g.units()) {
      const Index x = static_cast<Index>((g.units() - hit).find_first());
      return Violation{"anchor_surjective", "unit " + g.label(x) + " not hit"};
    }
  }
  if (!is_continuous(sp, g.arrows(), a.anchor_table())) {
    return Violation{"anchor_continuous", ""};
  }
  for (Index xi = 0; xi < g.size(); ++xi) {
    for (Index s = 0; s < a.size(); ++s) {
      if ((a.act(xi, s) != kNone) != a.admissible(xi, s)) {
        return Violation{"act_domain", "(" + g.label(xi) + "," + pl(s) + ")"};
      }
    }
  }
  for (Index s = 0; s < a.size(); ++s) {
    if (a.act(a.anchor(s), s) != s) return Violation{"unit_law", "sigma=" + pl(s)};
  }
  for (Index xi = 0; xi < g.size(); ++xi) {
    for (Index s = 0; s < a.size(); ++s) {
      if (a.admissible(xi, s) && a.anchor(a.act(xi, s)) != g.r(xi)) {
        return Violation{"compatibility", "(" + g.label(xi) + "," + pl(s) + ")"};
      }
    }
  }
  for (Index xi = 0; xi < g.size(); ++xi) {
    for (Index eta = 0; eta < g.size(); ++eta) {
      if (!g.composable(xi, eta)) continue;
      for (Index s = 0; s < a.size(); ++s) {
        if (!a.admissible(eta, s)) continue;
        if (a.act(g.mul(xi, eta), s) != a.act(xi, a.act(eta, s))) {
          return Violation{"associativity",
                           "(" + g.label(xi) + "," + g.label(eta) + "," + pl(s) + ")"};
        }
      }
    }
  }
  for (Index xi = 0; xi < g.size(); ++xi) {
    for (Index s = 0; s < a.size(); ++s) {
      if (!a.admissible(xi, s)) continue;
      const Subset& target = sp.neighborhood(a.act(xi, s));
      bool bad = false;
      for_each_member(g.arrows().neighborhood(xi), [&](Index xi2) {
        if (bad) return;
        for_each_member(sp.neighborhood(s), [&](Index s2) {
          if (!bad && a.admissible(xi2, s2) && !target.test(a.act(xi2, s2))) bad = true;
        });
      });
      if (bad) return Violation{"act_continuous", "(" + g.label(xi) + "," + pl(s) + ")"};
    }
  }
  return std::nullopt;
}

Action canonical_action(const GroupoidPtr& g) {
  const auto& units = g->unit_list();
  const std::size_t m = units.size();
  std::vector<std::string> labels;
  for (Index x : units) labels.push_back(g->label(x));
  FiniteSpace space = g->unit_space();
  space.set_labels(labels);
  Table anchor(units.begin(), units.end());
  Table act(g->size() * m, kNone);
  for (Index xi = 0; xi < g->size(); ++xi) {
    act[xi * m + g->unit_position(g->d(xi))] = g->unit_position(g->r(xi));
  }
  return Action(g, std::move(space), std::move(anchor), std::move(act));
}

Action self_action(const GroupoidPtr& g) {
  return Action(g, g->arrows(), g->rng(), g->mul_table());
}

Groupoid restricted_groupoid(const Groupoid& g, const Subset& delta, Table* embedding) {
  if (!subgroupoid_check(g, delta).is_subgroupoid) throw Error("not a subgroupoid");
  const auto ids = members(delta);
  Table pos(g.size(), kNone);
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<Index>(i);
  const std::size_t n = ids.size();
  Table src(n), rng(n), inv(n), mul(n * n, kNone);
  Subset units(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Index a = ids[i];
    if (pos[g.d(a)] == kNone || pos[g.r(a)] == kNone) {
      throw Error("subgroupoid does not contain the units of its arrows");
    }
    src[i] = pos[g.d(a)];
    rng[i] = pos[g.r(a)];
    inv[i] = pos[g.inv(a)];
    if (g.is_unit(a)) units.set(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (g.composable(a, ids[j])) mul[i * n + j] = pos[g.mul(a, ids[j])];
    }
  }
  if (embedding) *embedding = ids;
  return Groupoid(g.arrows().subspace(delta), std::move(units), std::move(src), std::move(rng),
                  std::move(inv), std::move(mul));
}

Action restrict_action(const Action& a, const Subset& delta, Table* embedding) {
  if (!subgroupoid_check(a.gpd(), delta).is_wide) throw Error("restrict: not a wide subgroupoid");
  Table emb;
  auto sub = std::make_shared<const Groupoid>(restricted_groupoid(a.gpd(), delta, &emb));
  const std::size_t m = a.size();
  Table anchor(m), act(sub->size() * m, kNone);
  Table pos(a.gpd().size(), kNone);
  for (std::size_t i = 0; i < emb.size(); ++i) pos[emb[i]] = static_cast<Index>(i);
  for (Index s = 0; s < m; ++s) anchor[s] = pos[a.anchor(s)];
  for (std::size_t i = 0; i < emb.size(); ++i) {
    for (Index s = 0; s < m; ++s) act[i * m + s] = a.act(emb[i], s);
  }
  if (embedding) *embedding = emb;
  return Action(std::move(sub), a.space(), std::move(anchor), std::move(act));
}

Action sub_action(const Action& a, const Subset& S, Table* embedding) {
  if (!is_invariant(a, S)) throw Error("sub_action: subset is not invariant");
  const auto pts = members(S);
  Table pos(a.size(), kNone);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<Index>(i);
  const std::size_t m = pts.size();
  Table anchor(m), act(a.gpd().size() * m, kNone);
  for (Index i = 0; i < m; ++i) {
    anchor[i] = a.anchor(pts[i]);
    for (Index xi = 0; xi < a.gpd().size(); ++xi) {
      if (a.admissible(xi, pts[i])) act[xi * m + i] = pos[a.act(xi, pts[i])];
    }
  }
  if (embedding) *embedding = pts;
  return Action(a.gpd_ptr(), a.space().subspace(S), std::move(anchor), std::move(act));
}

Action action_sum(const Action& a, const Action& b) {
  if (!(a.gpd() == b.gpd())) throw Error("action_sum: different groupoids");
  const std::size_t na = a.size(), m = na + b.size();
  std::vector<Subset> nbhd;
  std::vector<std::string> labels;
  Table anchor(m), act(a.gpd().size() * m, kNone);
  for (Index s = 0; s < m; ++s) {
    Subset u(m);
    if (s < na) {
      for_each_member(a.space().neighborhood(s), [&](Index t) { u.set(t); });
      labels.push_back(a.space().label(s));
      anchor[s] = a.anchor(s);
    } else {
      for_each_member(b.space().neighborhood(s - na), [&](Index t) { u.set(t + na); });
      labels.push_back(b.space().label(s - na) + "'");
      anchor[s] = b.anchor(s - na);
    }
    nbhd.push_back(std::move(u));
    for (Index xi = 0; xi < a.gpd().size(); ++xi) {
      if (s < na) {
        act[xi * m + s] = a.act(xi, s);
      } else if (b.admissible(xi, s - na)) {
        act[xi * m + s] = b.act(xi, s - na) + na;
      }
    }
  }
  return Action(a.gpd_ptr(), FiniteSpace::from_neighborhoods(std::move(nbhd), std::move(labels)),
                std::move(anchor), std::move(act));
}

Subset recurrence_set(const Action& a, const Subset& M, const Subset& N) {
  const Groupoid& g = a.gpd();
  Subset out(g.size());
  for (Index xi = 0; xi < g.size(); ++xi) {
    for_each_member(M, [&](Index s) {
      if (!out.test(xi) && a.admissible(xi, s) && N.test(a.act(xi, s))) out.set(xi);
    });
  }
  return out;
}

Subset act_set(const Action& a, const Subset& A, const Subset& M) {
  Subset out(a.size());
  for_each_member(A, [&](Index xi) {
    for_each_member(M, [&](Index s) {
      if (a.admissible(xi, s)) out.set(a.act(xi, s));
    });
  });
  return out;
}

namespace {

// Disjoint union over units x of the recurrence sets of the isotropy group
// G_x acting on Sigma_x.
Subset bundle_side(const Action& a, const Subset& M, const Subset& N) {
  const Groupoid& g = a.gpd();
  Subset out(g.size());
  for (Index x : g.unit_list()) {
    const Subset fibre = a.fiber(x);
    const Subset Mx = M & fibre, Nx = N & fibre;
    for_each_member(isotropy(g, x), [&](Index xi) {
      for_each_member(Mx, [&](Index s) {
        if (Nx.test(a.act(xi, s))) out.set(xi);
      });
    });
  }
  return out;
}

}  // namespace

bool recurrence_set_bundle_formula(const Action& a, std::uint64_t seed, int samples) {
  if (!recognize(a.gpd()).is_group_bundle) throw Error("bundle formula: not a group bundle");
  return sweep_pairs(a.size(), seed, samples, [&](const Subset& M, const Subset& N) {
    return recurrence_set(a, M, N) == bundle_side(a, M, N);
  });
}

bool self_action_formula(const GroupoidPtr& g, std::uint64_t seed, int samples) {
  const Action a = self_action(g);
  const std::size_t n = g->size();
  return sweep_pairs(n, seed, samples, [&](const Subset& M, const Subset& N) {
    Subset formula(n);
    for (Index xi = 0; xi < n; ++xi) {
      // xi^-1 N = {xi^-1 zeta : zeta in N, r(zeta) = r(xi)}
      Subset shifted(n);
      for_each_member(N, [&](Index z) {
        if (g->composable(g->inv(xi), z)) shifted.set(g->mul(g->inv(xi), z));
      });
      if ((range_fiber(*g, g->d(xi)) & M & shifted).any()) formula.set(xi);
    }
    return recurrence_set(a, M, N) == formula;
  });
}

CheckReport caofi_check(const Action& a) {
  CheckReport rep;
  const bool open = is_open_groupoid(a.gpd());
  rep.hypothesis("d_open", open);
  const auto& arrows = a.gpd().arrows();
  for (Index xi = 0; xi < a.gpd().size(); ++xi) {
    for (Index s = 0; s < a.size(); ++s) {
      const Subset AM = act_set(a, arrows.neighborhood(xi), a.space().neighborhood(s));
      rep.require_if("A.M open", open, a.space().is_open(AM), [&] {
        return "A=U(" + a.gpd().label(xi) + ") M=U(" + a.space().label(s) + ")";
      });
    }
  }
  return rep;
}

Subset orbit(const Action& a, Index s) {
  if (s >= a.size()) throw Error("orbit: unknown point");
  Subset out(a.size());
  for (Index xi = 0; xi < a.gpd().size(); ++xi) {
    if (a.admissible(xi, s)) out.set(a.act(xi, s));
  }
  return out;
}

Subset orbit_closure(const Action& a, Index s) { return a.space().closure(orbit(a, s)); }

Subset saturate(const Action& a, const Subset& M) {
  Subset out(a.size());
  for_each_member(M, [&](Index s) { out |= orbit(a, s); });
  return out;
}

bool is_invariant(const Action& a, const Subset& M) { return saturate(a, M) == M; }

Subset smallest_closed_invariant(const Action& a, Index s) {
  Subset cur = singleton(a.size(), s);
  for (;;) {
    Subset next = a.space().closure(saturate(a, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<Subset> orbits(const Action& a) {
  std::vector<Subset> out;
  Subset seen(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    if (seen.test(s)) continue;
    Subset o = orbit(a, s);
    seen |= o;
    out.push_back(std::move(o));
  }
  return out;
}

Report validate_morphism(const ActionMorphism& m) {
  if (!m.source || !m.target) return Violation{"endpoints", "null action"};
  const Action& A = *m.source;
  const Action& B = *m.target;
  if (auto v = validate_functor(A.gpd(), B.gpd(), m.psi)) return v;
  if (m.f.size() != A.size()) return Violation{"f_table", "wrong size"};
  for (Index v : m.f) {
    if (v >= B.size()) return Violation{"f_table", "entry out of range"};
  }
  if (!is_continuous(A.space(), B.space(), m.f)) return Violation{"f_continuous", ""};
  for (Index s = 0; s < A.size(); ++s) {
    if (B.anchor(m.f[s]) != m.psi[A.anchor(s)]) {
      return Violation{"diagram", "sigma=" + A.space().label(s)};
    }
  }
  for (Index xi = 0; xi < A.gpd().size(); ++xi) {
    for (Index s = 0; s < A.size(); ++s) {
      if (!A.admissible(xi, s)) continue;
      if (m.f[A.act(xi, s)] != B.act(m.psi[xi], m.f[s])) {
        return Violation{"equivariance",
                         "(" + A.gpd().label(xi) + "," + A.space().label(s) + ")"};
      }
    }
  }
  return std::nullopt;
}

ActionMorphism identity_morphism(const ActionPtr& a) {
  return {a, a, identity_table(a->gpd().size()), identity_table(a->size())};
}

ActionMorphism compose_morphisms(const ActionMorphism& m2, const ActionMorphism& m1) {
  if (!m1.target || !m2.source || !(*m1.target == *m2.source)) {
    throw Error("compose: target of the first morphism is not the source of the second");
  }
  ActionMorphism out{m1.source, m2.target, compose(m2.psi, m1.psi), compose(m2.f, m1.f)};
  if (auto v = validate_morphism(out)) {
    throw Error("compose: composite failed validation: " + v->clause + " " + v->witness);
  }
  return out;
}

bool is_epimorphism(const ActionMorphism& m) {
  return is_surjective(m.psi, m.target->gpd().size()) && is_surjective(m.f, m.target->size());
}

ActionMorphism terminal_morphism(const ActionPtr& a) {
  auto can = std::make_shared<const Action>(canonical_action(a->gpd_ptr()));
  Table f(a->size());
  for (Index s = 0; s < a->size(); ++s) f[s] = a->gpd().unit_position(a->anchor(s));
  return {a, can, identity_table(a->gpd().size()), std::move(f)};
}

ActionMorphism homoconstruction(const GroupoidPtr& xi, const ActionPtr& target,
                                std::span<const Index> Psi) {
  const Groupoid& G = *xi;
  const Groupoid& H = target->gpd();
  if (auto v = validate_functor(G, H, Psi)) {
    throw Error("homoconstruction: not a functor: " + v->clause);
  }
  const Table units = unit_map_positions(G, H, Psi);
  if (G.unit_count() != H.unit_count() ||
      !is_homeomorphism(G.unit_space(), H.unit_space(), units)) {
    throw Error("homoconstruction: unit map is not a homeomorphism");
  }
  Table psi_inv(H.size(), kNone);
  for (Index x : G.unit_list()) psi_inv[Psi[x]] = x;
  const std::size_t m = target->size();
  Table anchor(m), act(G.size() * m, kNone);
  for (Index s = 0; s < m; ++s) anchor[s] = psi_inv[target->anchor(s)];
  for (Index a = 0; a < G.size(); ++a) {
    for (Index s = 0; s < m; ++s) {
      if (G.d(a) == anchor[s]) act[a * m + s] = target->act(Psi[a], s);
    }
  }
  auto src = std::make_shared<const Action>(xi, target->space(), std::move(anchor), std::move(act));
  return {src, target, Table(Psi.begin(), Psi.end()), identity_table(m)};
}

TransportRecurrence transport_recurrence(const ActionMorphism& m, const Subset& M,
                                         const Subset& N) {
  const Action& A = *m.source;
  const Action& B = *m.target;
  TransportRecurrence t;
  t.lhs = image(m.psi, recurrence_set(A, M, N), B.gpd().size());
  t.rhs = recurrence_set(B, image(m.f, M, B.size()), image(m.f, N, B.size()));
  t.inclusion = t.lhs.is_subset_of(t.rhs);
  t.equality_hypotheses_met = is_surjective(m.psi, B.gpd().size()) &&
                              is_injective(m.psi_units()) && is_injective(m.f);
  t.equality = t.lhs == t.rhs;
  return t;
}

}  // namespace gd
