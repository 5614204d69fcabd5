#include "gd/actor.hpp"

namespace gd {

namespace {

// Position table of a unit map given on unit arrow ids.
Table unit_positions(const Groupoid& dom, const Groupoid& cod, std::span<const Index> on_units) {
  Table t(dom.unit_count());
  for (Index i = 0; i < t.size(); ++i) t[i] = cod.unit_position(on_units[dom.unit_list()[i]]);
  return t;
}

Actor diamond_from_functor(const GroupoidPtr& G, const GroupoidPtr& H, std::span<const Index> Psi,
                           const Table& mu) {
  Actor phi;
  phi.source = G;
  phi.target = H;
  phi.mu = mu;
  phi.diamond.assign(G->size() * H->size(), kNone);
  for (Index xi = 0; xi < G->size(); ++xi) {
    for (Index eta = 0; eta < H->size(); ++eta) {
      if (phi.admissible(xi, eta)) phi.diamond[xi * H->size() + eta] = H->mul(Psi[xi], eta);
    }
  }
  return phi;
}

std::string pair_label(const Actor& phi, Index xi, Index eta) {
  return "xi=" + phi.source->label(xi) + " eta'=" + phi.target->label(eta);
}

}  // namespace

Actor actor_from_triples(GroupoidPtr source, GroupoidPtr target, Table mu,
                         const std::vector<std::array<Index, 3>>& diamond, bool require_surjective_mu) {
  check_table(mu, target->size(), source->size(), "actor mu");
  Actor phi{std::move(source), std::move(target), std::move(mu), {}, require_surjective_mu};
  const std::size_t n = phi.source->size(), m = phi.target->size();
  phi.diamond.assign(n * m, kNone);
  for (const auto& [xi, eta, out] : diamond) {
    if (xi >= n || eta >= m || out >= m) throw Error("actor diamond: index out of range");
    if (!phi.admissible(xi, eta)) throw Error("actor diamond: entry off admissible pairs: " + pair_label(phi, xi, eta));
    Index& slot = phi.diamond[xi * m + eta];
    if (slot != kNone) throw Error("actor diamond: duplicate entry: " + pair_label(phi, xi, eta));
    slot = out;
  }
  for (Index xi = 0; xi < n; ++xi) {
    for (Index eta = 0; eta < m; ++eta) {
      if (phi.admissible(xi, eta) && phi.apply(xi, eta) == kNone) {
        throw Error("actor diamond: missing entry: " + pair_label(phi, xi, eta));
      }
    }
  }
  return phi;
}

Action as_action(const Actor& phi) {
  return Action(phi.source, phi.target->arrows(), phi.mu, phi.diamond);
}

Report validate_actor(const Actor& phi) {
  const Groupoid& G = *phi.source;
  const Groupoid& H = *phi.target;
  if (phi.mu.size() != H.size() || phi.diamond.size() != G.size() * H.size()) {
    return Violation{"action_table", "wrong size"};
  }
  if (auto r = validate_action(as_action(phi), false)) return Violation{"action_" + r->clause, r->witness};
  if (phi.require_surjective_mu && image(phi.mu, full_set(H.size()), G.size()) != G.units()) {
    return Violation{"mu_surjective", "mu misses a unit of the source"};
  }
  for (Index eta = 0; eta < H.size(); ++eta) {
    for (Index xi2 = 0; xi2 < H.size(); ++xi2) {
      if (H.composable(eta, xi2) && phi.mu[H.mul(eta, xi2)] != phi.mu[eta]) {
        return Violation{"beans", "eta'=" + H.label(eta) + " xi'=" + H.label(xi2)};
      }
    }
  }
  for (Index xi = 0; xi < G.size(); ++xi) {
    for (Index eta = 0; eta < H.size(); ++eta) {
      if (phi.admissible(xi, eta) && H.d(phi.apply(xi, eta)) != H.d(eta)) {
        return Violation{"teans", pair_label(phi, xi, eta)};
      }
    }
  }
  for (Index xi = 0; xi < G.size(); ++xi) {
    for (Index eta = 0; eta < H.size(); ++eta) {
      if (!phi.admissible(xi, eta)) continue;
      for (Index xi2 = 0; xi2 < H.size(); ++xi2) {
        if (!H.composable(eta, xi2)) continue;
        if (phi.apply(xi, H.mul(eta, xi2)) != H.mul(phi.apply(xi, eta), xi2)) {
          return Violation{"means", pair_label(phi, xi, eta) + " xi'=" + H.label(xi2)};
        }
      }
    }
  }
  for (Index eta = 0; eta < H.size(); ++eta) {
    if (phi.mu[eta] != phi.nu(H.r(eta))) return Violation{"mu_factor", "eta'=" + H.label(eta)};
  }
  return std::nullopt;
}

Actor identity_actor(const GroupoidPtr& g) {
  Table mu(g->size());
  for (Index x = 0; x < g->size(); ++x) mu[x] = g->r(x);
  return diamond_from_functor(g, g, identity_table(g->size()), mu);
}

Actor functor_actor(const GroupoidPtr& source, const GroupoidPtr& target, std::span<const Index> Psi) {
  const Table pos = unit_map_positions(*source, *target, Psi);
  if (pos.size() != target->unit_count() || !is_injective(pos)) {
    throw Error("functor_actor: unit map is not bijective");
  }
  Table inv(target->unit_count());
  for (Index i = 0; i < pos.size(); ++i) inv[pos[i]] = source->unit_list()[i];
  Table mu(target->size());
  for (Index eta = 0; eta < target->size(); ++eta) mu[eta] = inv[target->unit_position(target->r(eta))];
  return diamond_from_functor(source, target, Psi, mu);
}

Actor compose_actors(const Actor& phi23, const Actor& phi12) {
  if (!(*phi12.target == *phi23.source)) throw Error("compose_actors: endpoint mismatch");
  Actor out;
  out.source = phi12.source;
  out.target = phi23.target;
  out.require_surjective_mu = phi12.require_surjective_mu && phi23.require_surjective_mu;
  out.mu = compose(phi12.mu, phi23.mu);
  const std::size_t n = out.source->size(), m = out.target->size();
  out.diamond.assign(n * m, kNone);
  for (Index x1 = 0; x1 < n; ++x1) {
    for (Index x3 = 0; x3 < m; ++x3) {
      if (!out.admissible(x1, x3)) continue;
      out.diamond[x1 * m + x3] = phi23.apply(phi12.apply(x1, phi23.mu[x3]), x3);
    }
  }
  if (auto v = validate_actor(out)) throw Error("compose_actors: composite invalid: " + v->clause + " " + v->witness);
  return out;
}

Report validate_actor_of_actions(const ActorOfActions& pa) {
  if (auto r = validate_actor(pa.actor)) return Violation{"actor_" + r->clause, r->witness};
  const Action& S = *pa.source;
  const Action& T = *pa.target;
  if (!(S.gpd() == *pa.actor.source) || !(T.gpd() == *pa.actor.target)) {
    return Violation{"endpoints", "action groupoids differ from the actor"};
  }
  if (pa.g.size() != S.size()) return Violation{"g_table", "wrong size"};
  for (Index x : pa.g) {
    if (x >= T.size()) return Violation{"g_table", "entry out of range"};
  }
  if (!is_continuous(S.space(), T.space(), pa.g)) return Violation{"g_continuous", ""};
  for (Index s = 0; s < S.size(); ++s) {
    if (S.anchor(s) != pa.actor.nu(T.anchor(pa.g[s]))) {
      return Violation{"fuame", "sigma=" + S.space().label(s)};
    }
  }
  for (Index xi = 0; xi < S.gpd().size(); ++xi) {
    for (Index s = 0; s < S.size(); ++s) {
      if (!S.admissible(xi, s)) continue;
      const Index gs = pa.g[s];
      const Index arrow = pa.actor.apply(xi, T.anchor(gs));
      if (arrow == kNone || !T.admissible(arrow, gs) || pa.g[S.act(xi, s)] != T.act(arrow, gs)) {
        return Violation{"siete", "xi=" + S.gpd().label(xi) + " sigma=" + S.space().label(s)};
      }
    }
  }
  return std::nullopt;
}

ActorOfActions identity_actor_of_actions(const ActionPtr& theta) {
  return {identity_actor(theta->gpd_ptr()), theta, theta, identity_table(theta->size())};
}

ActorOfActions compose_actor_of_actions(const ActorOfActions& pa23, const ActorOfActions& pa12) {
  if (!(*pa12.target == *pa23.source)) throw Error("compose_actor_of_actions: endpoint mismatch");
  ActorOfActions out{compose_actors(pa23.actor, pa12.actor), pa12.source, pa23.target,
                     compose(pa23.g, pa12.g)};
  if (auto v = validate_actor_of_actions(out)) {
    throw Error("compose_actor_of_actions: composite invalid: " + v->clause + " " + v->witness);
  }
  return out;
}

Subset diamond_saturation(const Actor& phi, const Subset& S) {
  const std::size_t m = phi.target->size();
  if (S.size() != m) throw Error("diamond_saturation: subset size mismatch");
  // Orbits of a groupoid action: Xi_{mu(s)} . s.
  Subset out(m);
  for_each_member(S, [&](Index s) {
    for (Index xi = 0; xi < phi.source->size(); ++xi) {
      if (phi.admissible(xi, s)) out.set(phi.apply(xi, s));
    }
  });
  return out;
}

Subset anchored_image(const ActorOfActions& pa) {
  Subset out(pa.target->gpd().size());
  for (Index s = 0; s < pa.source->size(); ++s) out.set(pa.target->anchor(pa.g[s]));
  return out;
}

bool saturates(const ActorOfActions& pa) {
  return diamond_saturation(pa.actor, anchored_image(pa)).all();
}

CheckReport lemma_constant_check(const Actor& phi, const ActorOfActions* pa) {
  const Groupoid& H = *phi.target;
  CheckReport rep;
  const bool sat = pa && saturates(*pa);
  rep.hypothesis("saturated", sat);
  for (Index eta = 0; eta < H.size(); ++eta) {
    const Subset orb = diamond_saturation(phi, singleton(H.size(), eta));
    const Subset fibre = source_fiber(H, H.d(eta));
    rep.require("d' constant on orbits", orb.is_subset_of(fibre), [&] { return "eta'=" + H.label(eta); });
    rep.require_if("orbit = d'-fibre", sat, orb == fibre, [&] { return "eta'=" + H.label(eta); });
  }
  rep.require_if("rho' g surjective", sat, pa && anchored_image(*pa) == H.units());
  return rep;
}

Liema liema_check(const ActorOfActions& pa, const Subset& M, const Subset& N) {
  const Action& S = *pa.source;
  const Action& T = *pa.target;
  const Groupoid& G = S.gpd();
  const Groupoid& H = T.gpd();
  const Actor& phi = pa.actor;
  Liema r;
  r.lhs = Subset(H.size());
  r.lhs_setwise = Subset(H.size());
  const Subset rec = recurrence_set(S, M, N);
  for_each_member(M, [&](Index s) {
    const Index x = T.anchor(pa.g[s]);
    for (Index xi = 0; xi < G.size(); ++xi) {
      if (!S.admissible(xi, s)) continue;
      if (N.test(S.act(xi, s))) r.lhs.set(phi.apply(xi, x));
    }
    for_each_member(rec, [&](Index xi) {
      if (phi.admissible(xi, x)) r.lhs_setwise.set(phi.apply(xi, x));
    });
  });
  const Subset gN = image(pa.g, N, T.size());
  r.rhs = recurrence_set(T, image(pa.g, M, T.size()), gN);
  r.inclusion = r.lhs.is_subset_of(r.rhs);
  r.setwise_inclusion = r.lhs_setwise.is_subset_of(r.rhs);
  r.eq_hyp = saturates(pa) && is_injective(pa.g);
  r.equality = r.lhs == r.rhs;
  r.unwitnessed = Subset(H.size());
  for_each_member(r.rhs, [&](Index eta) {
    // First sigma0 in M, then first xi, in id order.
    Index s0 = kNone;
    for (Index s = 0; s < S.size() && s0 == kNone; ++s) {
      if (M.test(s) && T.admissible(eta, pa.g[s]) && gN.test(T.act(eta, pa.g[s]))) s0 = s;
    }
    bool found = false;
    if (s0 != kNone) {
      const Index x = T.anchor(pa.g[s0]);
      for (Index xi = 0; xi < G.size() && !found; ++xi) {
        found = S.admissible(xi, s0) && phi.apply(xi, x) == eta && N.test(S.act(xi, s0));
      }
    }
    if (!found) r.unwitnessed.set(eta);
  });
  return r;
}

CheckReport jnitzel_transport(const ActorOfActions& pa, const Bornology& arrows,
                              const Bornology& arrows_prime) {
  const Action& S = *pa.source;
  const Action& T = *pa.target;
  CheckReport rep(arrows.is_all() && arrows_prime.is_all() ? Mode::faithful : Mode::model_level);
  const bool sat = saturates(pa);
  const bool surj = is_surjective(pa.g, T.size());
  rep.hypothesis("saturated", sat);
  rep.hypothesis("g_surjective", surj);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    const Subset O = orbit(S, s);
    const Subset Op = orbit(T, pa.g[s]);
    const Subset gO = image(pa.g, O, T.size());
    rep.require("(i) g(O)<=O'", gO.is_subset_of(Op), [&] { return at; });
    rep.require("(i) g(cl O)<=cl O'",
                image(pa.g, S.space().closure(O), T.size()).is_subset_of(T.space().closure(Op)),
                [&] { return at; });
    rep.require_if("(ii) g(O)=O'", sat, gO == Op, [&] { return at; });
  }
  for (const auto& M : invariant_sets(S)) {
    rep.require_if("(ii) g(invariant) invariant", sat, is_invariant(T, image(pa.g, M, T.size())),
                   [&] { return "M=" + to_string(M); });
  }
  for (const auto& B : invariant_sets(T)) {
    rep.require("(iii) g^-1(invariant) invariant", is_invariant(S, preimage(pa.g, B)),
                [&] { return "B'=" + to_string(B); });
  }
  const Subset per = periodic_points(S, arrows);
  const Subset per_p = periodic_points(T, arrows_prime);
  const Subset alp = almost_periodic_points(S, arrows);
  const Subset alp_p = almost_periodic_points(T, arrows_prime);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    rep.require_if("siaia periodic", sat && per.test(s), per_p.test(pa.g[s]), [&] { return at; });
    // Finite spaces are locally compact.
    rep.require_if("siaia2 almost_periodic", sat && alp.test(s), alp_p.test(pa.g[s]), [&] { return at; });
  }
  if (surj) {
    const DynProfile p = classify(S);
    const DynProfile q = classify(T);
    rep.require_if("sentintaa(i) T", p.T, q.T);
    rep.require_if("sentintaa(i) PT", p.PT, q.PT);
    rep.require_if("sentintaa(ii) WPT", p.WPT, q.WPT);
    rep.require_if("sentintaa(iii) TT1", p.TT1, q.TT1);
    rep.require_if("sentintaa(iii) TT2", p.TT2, q.TT2);
    rep.require_if("sentinta RT", p.RT, q.RT);
    for (auto& M : invariant_sets(S)) {
      if (!is_minimal_set(S, M)) continue;
      const Subset gM = image(pa.g, M, T.size());
      rep.require_if("sentintaa(iv) minimal image", T.space().is_closed(gM), is_minimal_set(T, gM),
                     [&] { return "M=" + to_string(M) + " g(M)=" + to_string(gM); });
    }
  } else {
    for (const char* c : {"sentintaa(i) T", "sentintaa(i) PT", "sentintaa(ii) WPT", "sentintaa(iii) TT1",
                          "sentintaa(iii) TT2", "sentinta RT", "sentintaa(iv) minimal image"}) {
      rep.not_applicable(c);
    }
  }
  return rep;
}

CheckReport jnitzel_transport(const ActorOfActions& pa) {
  return jnitzel_transport(pa, Bornology::all_subsets(pa.source->gpd().size()),
                           Bornology::all_subsets(pa.target->gpd().size()));
}

bool is_proper_actor(const Actor& phi, const Bornology& arrows, const Bornology& arrows_prime) {
  const Groupoid& G = *phi.source;
  const Groupoid& H = *phi.target;
  if (arrows.carrier_size() != G.size() || arrows_prime.carrier_size() != H.size()) {
    throw Error("is_proper_actor: bornology carrier mismatch");
  }
  for (Index x : H.unit_list()) {
    for (Index xi = 0; xi < G.size(); ++xi) {
      if (G.d(xi) != phi.nu(x)) continue;
      // Preimage of the largest bounded set must be bounded.
      if (arrows_prime.bound().test(phi.apply(xi, x)) && !arrows.bound().test(xi)) return false;
    }
  }
  return true;
}

CheckReport transflim_check(const ActorOfActions& pa, const Bornology& arrows,
                            const Bornology& arrows_prime) {
  const Action& S = *pa.source;
  const Action& T = *pa.target;
  CheckReport rep(arrows.is_all() && arrows_prime.is_all() ? Mode::faithful : Mode::model_level);
  const bool proper = is_proper_actor(pa.actor, arrows, arrows_prime);
  rep.hypothesis("actor_proper", proper);
  if (!proper) {
    rep.not_applicable("limit points");
    rep.not_applicable("recurrent");
    rep.not_applicable("weakly_periodic");
    return rep;
  }
  const Subset rec = recurrent_points(S, arrows);
  const Subset rec_p = recurrent_points(T, arrows_prime);
  const Subset wp = weakly_periodic_points(S, arrows);
  const Subset wp_p = weakly_periodic_points(T, arrows_prime);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    const Subset L = limit_set(S, s, arrows);
    const Subset Lp = limit_set(T, pa.g[s], arrows_prime);
    rep.require_if("limit points", L.any(), image(pa.g, L, T.size()).is_subset_of(Lp), [&] { return at; });
    rep.require_if("recurrent", rec.test(s), rec_p.test(pa.g[s]), [&] { return at; });
    rep.require_if("weakly_periodic", wp.test(s), wp_p.test(pa.g[s]), [&] { return at; });
  }
  return rep;
}

ActorOfActions miraj_to_actor(const ActionMorphism& m) {
  if (auto v = validate_morphism(m)) throw Error("miraj_to_actor: invalid morphism: " + v->clause);
  const GroupoidPtr& G = m.source->gpd_ptr();
  const GroupoidPtr& H = m.target->gpd_ptr();
  const Table pos = unit_map_positions(*G, *H, m.psi);
  if (pos.size() != H->unit_count() || !is_homeomorphism(G->unit_space(), H->unit_space(), pos)) {
    throw Error("miraj_to_actor: psi is not a homeomorphism");
  }
  ActorOfActions pa{functor_actor(G, H, m.psi), m.source, m.target, m.f};
  if (auto v = validate_actor_of_actions(pa)) {
    throw Error("miraj_to_actor: result invalid: " + v->clause + " " + v->witness);
  }
  return pa;
}

ActionMorphism miraj_to_morphism(const ActorOfActions& pa) {
  if (auto v = validate_actor_of_actions(pa)) throw Error("miraj_to_morphism: invalid input: " + v->clause);
  const Groupoid& G = *pa.actor.source;
  const Groupoid& H = *pa.actor.target;
  const Table nu_pos = unit_positions(H, G, pa.actor.mu);
  if (nu_pos.size() != G.unit_count() || !is_homeomorphism(H.unit_space(), G.unit_space(), nu_pos)) {
    throw Error("miraj_to_morphism: nu is not a homeomorphism");
  }
  Table nu_inv(G.size(), kNone);
  for (Index x : H.unit_list()) nu_inv[pa.actor.nu(x)] = x;
  Table Psi(G.size());
  for (Index xi = 0; xi < G.size(); ++xi) Psi[xi] = pa.actor.apply(xi, nu_inv[G.d(xi)]);
  ActionMorphism m{pa.source, pa.target, std::move(Psi), pa.g};
  if (auto v = validate_morphism(m)) {
    throw Error("miraj_to_morphism: result invalid: " + v->clause + " " + v->witness);
  }
  return m;
}

CheckReport image_saturation_check(const ActionMorphism& m, const ActorOfActions& pa) {
  const Groupoid& H = m.target->gpd();
  CheckReport rep;
  const Subset img = image(m.psi, full_set(m.source->gpd().size()), H.size());
  const Subset sat = diamond_saturation(pa.actor, H.units());
  rep.require("Psi(Xi)=Sat(X')", img == sat, [&] { return to_string(img) + " vs " + to_string(sat); });
  const bool rhs = is_surjective(pa.g, pa.target->size()) && saturates(pa);
  rep.require("epi<=>g_surjective&saturated", is_epimorphism(m) == rhs);
  return rep;
}

CheckReport structure_check(const Actor& phi, const Subset& Yp, const Subset& Zp) {
  const Groupoid& H = *phi.target;
  if (Yp.size() != H.size() || Zp.size() != H.size() || !Yp.is_subset_of(H.units()) ||
      !Zp.is_subset_of(H.units())) {
    throw Error("structure_check: inputs must be sets of units of the target");
  }
  CheckReport rep;
  const Subset SY = diamond_saturation(phi, Yp);
  const Subset SZ = diamond_saturation(phi, Zp);
  const Subset SX = diamond_saturation(phi, H.units());
  bool closed = true;
  for_each_member(SY, [&](Index a) {
    for_each_member(SY, [&](Index b) {
      if (H.composable(a, b) && !SY.test(H.mul(a, b))) closed = false;
    });
  });
  rep.require("semigroupoid", closed, [&] { return "Y'=" + to_string(Yp); });
  rep.require("Sat(X')Sat(Y')<=Sat(Y')", product_set(H, SX, SY).is_subset_of(SY),
              [&] { return "Y'=" + to_string(Yp); });
  bool invariant = true;
  for (Index eta = 0; eta < H.size(); ++eta) {
    if (Yp.test(H.d(eta)) != Yp.test(H.r(eta))) invariant = false;
  }
  rep.hypothesis("Y'_invariant", invariant);
  bool inv_closed = true;
  for_each_member(SY, [&](Index a) {
    if (!SY.test(H.inv(a))) inv_closed = false;
  });
  rep.require_if("subgroupoid", invariant, inv_closed, [&] { return "Y'=" + to_string(Yp); });
  rep.require("Sat(Y')=Sat(Z')<=>Y'=Z'", (SY == SZ) == (Yp == Zp),
              [&] { return "Y'=" + to_string(Yp) + " Z'=" + to_string(Zp); });
  return rep;
}

CheckReport structure_check(const ActorOfActions& pa) {
  const Groupoid& H = *pa.actor.target;
  CheckReport rep;
  const Subset S = diamond_saturation(pa.actor, anchored_image(pa));
  bool closed = true, inv_closed = true;
  for_each_member(S, [&](Index a) {
    if (!S.test(H.inv(a))) inv_closed = false;
    for_each_member(S, [&](Index b) {
      if (H.composable(a, b) && !S.test(H.mul(a, b))) closed = false;
    });
  });
  rep.require("Sat[rho'(g(Sigma))] multiplicative", closed);
  rep.require("Sat[rho'(g(Sigma))] inverse-closed", inv_closed);
  return rep;
}

CheckReport enfin_check(const Actor& phi) {
  CheckReport rep;
  const bool open = is_open_groupoid(*phi.source);
  const bool sat = diamond_saturation(phi, phi.target->units()).all();
  rep.hypothesis("source_open", open);
  rep.hypothesis("Sat(X')=Xi'", sat);
  rep.require_if("target_open", open && sat, is_open_groupoid(*phi.target));
  return rep;
}

}  // namespace gd
