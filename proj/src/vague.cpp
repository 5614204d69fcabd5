#include "gd/vague.hpp"

namespace gd {

namespace {

std::string triple_label(const PullbackGroupoid& pb, Index t) {
  const auto& [a, xi, b] = pb.triples[t];
  return "(" + pb.aspace.label(a) + "," + pb.base->label(xi) + "," + pb.aspace.label(b) + ")";
}

Table to_positions(const Groupoid& g, std::span<const Index> unit_ids) {
  Table t(unit_ids.size());
  for (std::size_t i = 0; i < unit_ids.size(); ++i) t[i] = g.unit_position(unit_ids[i]);
  return t;
}

}  // namespace

Index PullbackGroupoid::find(Index a, Index xi, Index b) const {
  const std::size_t na = aspace.size(), n = base->size();
  if (a >= na || b >= na || xi >= n) return kNone;
  // triples are lexicographic; binary search.
  const std::array<Index, 3> key{a, xi, b};
  auto it = std::lower_bound(triples.begin(), triples.end(), key);
  if (it == triples.end() || *it != key) return kNone;
  return static_cast<Index>(it - triples.begin());
}

PullbackGroupoid build_pullback(const GroupoidPtr& g, const FiniteSpace& A, std::span<const Index> pi,
                                bool validate) {
  const std::size_t na = A.size();
  check_table(pi, na, g->size(), "pullback pi");
  for (Index a = 0; a < na; ++a) {
    if (!g->is_unit(pi[a])) throw Error("pullback: pi does not land in the units");
  }
  if (image(pi, full_set(na), g->size()) != g->units()) {
    throw Error("pullback: pi is not surjective onto the units");
  }
  if (!is_continuous(A, g->arrows(), pi)) throw Error("pullback: pi is not continuous");

  PullbackGroupoid pb;
  pb.base = g;
  pb.aspace = A;
  pb.pi.assign(pi.begin(), pi.end());
  for (Index a = 0; a < na; ++a) {
    for (Index xi = 0; xi < g->size(); ++xi) {
      if (pi[a] != g->r(xi)) continue;
      for (Index b = 0; b < na; ++b) {
        if (pi[b] == g->d(xi)) pb.triples.push_back({a, xi, b});
      }
    }
  }
  const std::size_t n = pb.triples.size();
  pb.Pi.resize(n);
  pb.unit_of.resize(na);
  std::vector<std::vector<Index>> by_range(na);
  Subset units(n);
  for (Index t = 0; t < n; ++t) {
    const auto& [a, xi, b] = pb.triples[t];
    pb.Pi[t] = xi;
    by_range[a].push_back(t);
    if (a == b && xi == pi[a]) {
      units.set(t);
      pb.unit_of[a] = t;
    }
  }
  Table src(n), rng(n), inv(n), mul(n * n, kNone);
  std::vector<Subset> nbhd;
  std::vector<std::string> labels;
  nbhd.reserve(n);
  for (Index t = 0; t < n; ++t) {
    const auto& [a, xi, b] = pb.triples[t];
    src[t] = pb.unit_of[b];
    rng[t] = pb.unit_of[a];
    inv[t] = pb.find(b, g->inv(xi), a);
    for (Index u : by_range[b]) {
      const auto& [b2, eta, c] = pb.triples[u];
      mul[t * n + u] = pb.find(a, g->mul(xi, eta), c);
    }
    Subset nb(n);
    for (Index u = 0; u < n; ++u) {
      const auto& [a2, xi2, b2] = pb.triples[u];
      if (A.leq(a, a2) && g->arrows().leq(xi, xi2) && A.leq(b, b2)) nb.set(u);
    }
    nbhd.push_back(std::move(nb));
    labels.push_back(triple_label(pb, t));
  }
  auto realized = std::make_shared<const Groupoid>(
      FiniteSpace::from_neighborhoods(std::move(nbhd), std::move(labels)), std::move(units),
      std::move(src), std::move(rng), std::move(inv), std::move(mul));
  if (validate) {
    if (auto v = validate_groupoid(*realized)) {
      throw Error("pullback groupoid failed validation: " + v->clause + " " + v->witness);
    }
  }
  pb.realized = std::move(realized);
  return pb;
}

PullbackGroupoid pullback_over_identity(const GroupoidPtr& g) {
  FiniteSpace X = g->unit_space();
  std::vector<std::string> labels;
  for (Index x : g->unit_list()) labels.push_back(g->label(x));
  X.set_labels(std::move(labels));
  return build_pullback(g, X, g->unit_list());
}

Index PullbackAction::find(Index s, Index a) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<Index, Index>{s, a});
  if (it == pairs.end() || *it != std::pair<Index, Index>{s, a}) return kNone;
  return static_cast<Index>(it - pairs.begin());
}

ActionMorphism PullbackAction::projection() const { return {realized, source, pb.Pi, pr1}; }

PullbackAction build_pullback_action(const ActionPtr& theta, const PullbackGroupoid& pb,
                                     bool validate) {
  if (!(theta->gpd() == *pb.base)) throw Error("pullback action: groupoid mismatch");
  PullbackAction pa;
  pa.source = theta;
  pa.pb = pb;
  const Action& th = *theta;
  const FiniteSpace& A = pb.aspace;
  for (Index s = 0; s < th.size(); ++s) {
    for (Index a = 0; a < A.size(); ++a) {
      if (th.anchor(s) == pb.pi[a]) pa.pairs.emplace_back(s, a);
    }
  }
  const std::size_t m = pa.pairs.size();
  const Groupoid& G = *pb.realized;
  Table anchor(m), act(G.size() * m, kNone);
  std::vector<Subset> nbhd;
  std::vector<std::string> labels;
  for (Index p = 0; p < m; ++p) {
    const auto [s, a] = pa.pairs[p];
    pa.pr1.push_back(s);
    pa.pr2.push_back(a);
    anchor[p] = pb.unit_of[a];
    Subset nb(m);
    for (Index q = 0; q < m; ++q) {
      const auto [s2, a2] = pa.pairs[q];
      if (th.space().leq(s, s2) && A.leq(a, a2)) nb.set(q);
    }
    nbhd.push_back(std::move(nb));
    labels.push_back("(" + th.space().label(s) + "," + A.label(a) + ")");
  }
  // (a, xi, b) . (s, b) = (xi . s, a)
  for (Index t = 0; t < G.size(); ++t) {
    const auto& [a, xi, b] = pb.triples[t];
    for (Index p = 0; p < m; ++p) {
      const auto [s, b2] = pa.pairs[p];
      if (b2 != b) continue;
      act[t * m + p] = pa.find(th.act(xi, s), a);
    }
  }
  auto realized = std::make_shared<const Action>(
      pb.realized, FiniteSpace::from_neighborhoods(std::move(nbhd), std::move(labels)),
      std::move(anchor), std::move(act));
  if (validate) {
    if (auto v = validate_action(*realized)) {
      throw Error("pullback action failed validation: " + v->clause + " " + v->witness);
    }
  }
  pa.realized = std::move(realized);
  return pa;
}

bool pullback_recurrence_identity(const PullbackAction& pa, const Subset& M, const Subset& N) {
  const Subset lhs = recurrence_set(*pa.realized, preimage(pa.pr1, M), preimage(pa.pr1, N));
  const Subset rhs = preimage(pa.pb.Pi, recurrence_set(*pa.source, M, N));
  return lhs == rhs;
}

Bornology pullback_bornology(const PullbackGroupoid& pb, const Bornology& onA,
                             const Bornology& arrows) {
  Subset T(pb.triples.size());
  for (Index t = 0; t < T.size(); ++t) {
    const auto& [a, xi, b] = pb.triples[t];
    if (onA.bound().test(a) && arrows.bound().test(xi) && onA.bound().test(b)) T.set(t);
  }
  return Bornology::from_bound(pb.realized->arrows(), T);
}

CheckReport pullback_proper_check(const PullbackGroupoid& pb, const Bornology& onA,
                                  const Bornology& onX, const Bornology& arrows,
                                  const Bornology& pb_arrows) {
  const Groupoid& g = *pb.base;
  if (onA.carrier_size() != pb.aspace.size() || onX.carrier_size() != g.unit_count() ||
      arrows.carrier_size() != g.size() || pb_arrows.carrier_size() != pb.triples.size()) {
    throw Error("pullback_proper_check: bornology carrier mismatch");
  }
  CheckReport rep(onA.is_all() && onX.is_all() && arrows.is_all() && pb_arrows.is_all()
                      ? Mode::faithful
                      : Mode::model_level);
  const bool pi_proper = is_proper(to_positions(g, pb.pi), onA, onX);
  const Subset rT = image(range_to_unit_space(g), arrows.bound(), g.unit_count());
  const Subset dT = image(source_to_unit_space(g), arrows.bound(), g.unit_count());
  const bool rd_bounded = onX.is_bounded(rT) && onX.is_bounded(dT);
  rep.hypothesis("pi_proper", pi_proper);
  rep.hypothesis("r_d_bounded", rd_bounded);
  rep.require_if("Pi_proper", pi_proper && rd_bounded, is_proper(pb.Pi, pb_arrows, arrows));
  return rep;
}

Table GeneralizedVagueMorphism::Gamma2() const { return compose(pb_prime.Pi, Gamma); }

Table gamma_from_gamma2(const PullbackGroupoid& pb, const PullbackGroupoid& pb_prime,
                        std::span<const Index> gamma, std::span<const Index> Gamma2) {
  check_table(gamma, pb.aspace.size(), pb_prime.aspace.size(), "gamma");
  check_table(Gamma2, pb.triples.size(), pb_prime.base->size(), "Gamma2");
  Table out(pb.triples.size());
  for (Index t = 0; t < out.size(); ++t) {
    const auto& [a, xi, b] = pb.triples[t];
    out[t] = pb_prime.find(gamma[a], Gamma2[t], gamma[b]);
    if (out[t] == kNone) {
      throw Error("Gamma2 at " + triple_label(pb, t) + " does not give an arrow of the target pullback");
    }
  }
  return out;
}

Report validate_gvm(const GeneralizedVagueMorphism& v) {
  const PullbackGroupoid& P = v.pb;
  const PullbackGroupoid& Q = v.pb_prime;
  if (v.gamma.size() != P.aspace.size()) return Violation{"gamma_table", "wrong size"};
  for (Index x : v.gamma) {
    if (x >= Q.aspace.size()) return Violation{"gamma_table", "entry out of range"};
  }
  if (!is_continuous(P.aspace, Q.aspace, v.gamma)) return Violation{"gamma_continuous", ""};
  if (auto r = validate_functor(*P.realized, *Q.realized, v.Gamma)) {
    return Violation{"Gamma_" + r->clause, r->witness};
  }
  for (Index a = 0; a < P.aspace.size(); ++a) {
    if (v.Gamma[P.unit_of[a]] != Q.unit_of[v.gamma[a]]) {
      return Violation{"Gamma_units_gamma", "a=" + P.aspace.label(a)};
    }
  }
  for (Index t = 0; t < P.triples.size(); ++t) {
    const auto& img = Q.triples[v.Gamma[t]];
    if (img[0] != v.gamma[P.triples[t][0]] || img[2] != v.gamma[P.triples[t][2]]) {
      return Violation{"Gamma_decomposition", triple_label(P, t)};
    }
  }
  const Table G2 = v.Gamma2();
  const Groupoid& H = *Q.base;
  const Groupoid& R = *P.realized;
  for (Index t = 0; t < R.size(); ++t) {
    for (Index u = 0; u < R.size(); ++u) {
      if (R.composable(t, u) && G2[R.mul(t, u)] != H.mul(G2[t], G2[u])) {
        return Violation{"Gamma2_cocycle", triple_label(P, t) + " " + triple_label(P, u)};
      }
    }
  }
  return std::nullopt;
}

ActionMorphism GVMOfActions::lifted() const {
  Table f(pa.pairs.size());
  for (Index p = 0; p < f.size(); ++p) {
    const auto [s, a] = pa.pairs[p];
    f[p] = pa_prime.find(h[s], gvm.gamma[a]);
  }
  return {pa.realized, pa_prime.realized, gvm.Gamma, std::move(f)};
}

GVMOfActions make_gvm_action(ActionPtr source, ActionPtr target, const FiniteSpace& A,
                             std::span<const Index> pi, const FiniteSpace& A_prime,
                             std::span<const Index> pi_prime, Table gamma, Table Gamma, Table h,
                             bool validate_pullbacks) {
  GVMOfActions va;
  va.gvm.pb = build_pullback(source->gpd_ptr(), A, pi, validate_pullbacks);
  va.gvm.pb_prime = build_pullback(target->gpd_ptr(), A_prime, pi_prime, validate_pullbacks);
  check_table(gamma, A.size(), A_prime.size(), "gamma");
  check_table(Gamma, va.gvm.pb.triples.size(), va.gvm.pb_prime.triples.size(), "Gamma");
  check_table(h, source->size(), target->size(), "h");
  va.gvm.gamma = std::move(gamma);
  va.gvm.Gamma = std::move(Gamma);
  va.h = std::move(h);
  va.pa = build_pullback_action(source, va.gvm.pb, validate_pullbacks);
  va.pa_prime = build_pullback_action(target, va.gvm.pb_prime, validate_pullbacks);
  va.source = std::move(source);
  va.target = std::move(target);
  return va;
}

Report validate_gvm_action(const GVMOfActions& va) {
  if (auto r = validate_gvm(va.gvm)) return r;
  const Action& S = *va.source;
  const Action& T = *va.target;
  const auto& P = va.gvm.pb;
  const auto& Q = va.gvm.pb_prime;
  if (!is_continuous(S.space(), T.space(), va.h)) return Violation{"h_continuous", ""};
  for (Index s = 0; s < S.size(); ++s) {
    for (Index a = 0; a < P.aspace.size(); ++a) {
      const bool lhs = S.anchor(s) == P.pi[a];
      const bool rhs = T.anchor(va.h[s]) == Q.pi[va.gvm.gamma[a]];
      if (lhs != rhs) {
        return Violation{"(i)", "(sigma,a)=(" + S.space().label(s) + "," + P.aspace.label(a) + ")"};
      }
    }
  }
  if (auto r = validate_morphism(va.lifted())) return Violation{"(ii) " + r->clause, r->witness};
  // Second route: h(xi . s) = Gamma2(a, xi, b) .' h(s) with pi(b) = d(xi) = rho(s).
  const Table G2 = va.gvm.Gamma2();
  for (Index t = 0; t < P.triples.size(); ++t) {
    const auto& [a, xi, b] = P.triples[t];
    for (Index s = 0; s < S.size(); ++s) {
      if (S.anchor(s) != P.pi[b]) continue;
      if (!T.admissible(G2[t], va.h[s]) || va.h[S.act(xi, s)] != T.act(G2[t], va.h[s])) {
        return Violation{"HOM", triple_label(P, t) + " sigma=" + S.space().label(s)};
      }
    }
  }
  return std::nullopt;
}

GVMOfActions embed_ordinary(const ActionMorphism& m) {
  if (auto v = validate_morphism(m)) {
    throw Error("embed_ordinary: invalid morphism: " + v->clause + " " + v->witness);
  }
  const Groupoid& G = m.source->gpd();
  const Groupoid& H = m.target->gpd();
  if (!is_injective(m.psi_units())) {
    throw Error("embed_ordinary: unit map is not injective, condition (i) cannot hold");
  }
  const PullbackGroupoid P = pullback_over_identity(m.source->gpd_ptr());
  const PullbackGroupoid Q = pullback_over_identity(m.target->gpd_ptr());
  Table gamma = unit_map_positions(G, H, m.psi);
  Table Gamma(P.triples.size());
  for (Index t = 0; t < Gamma.size(); ++t) {
    const auto& [x, xi, y] = P.triples[t];
    Gamma[t] = Q.find(gamma[x], m.psi[xi], gamma[y]);
  }
  return make_gvm_action(m.source, m.target, P.aspace, P.pi, Q.aspace, Q.pi, std::move(gamma),
                         std::move(Gamma), m.f);
}

bool equality_hypotheses(const GVMOfActions& va) {
  return is_surjective(va.gvm.Gamma, va.gvm.pb_prime.triples.size()) && is_injective(va.h) &&
         is_injective(va.gvm.gamma);
}

ThmBoth thm_both_check(const GVMOfActions& va, const Subset& M, const Subset& N) {
  const Action& S = *va.source;
  const Action& T = *va.target;
  const auto& P = va.gvm.pb;
  const auto& Q = va.gvm.pb_prime;
  ThmBoth r;
  const Subset rec = recurrence_set(S, M, N);
  const Subset rec_prime = recurrence_set(T, image(va.h, M, T.size()), image(va.h, N, T.size()));
  r.lhs = image(va.gvm.Gamma, preimage(P.Pi, rec), Q.triples.size());
  r.rhs = preimage(Q.Pi, rec_prime);
  r.inclusion = r.lhs.is_subset_of(r.rhs);
  r.eq_hyp = equality_hypotheses(va);
  r.equality = r.lhs == r.rhs;
  const Subset vorm = image(Q.Pi, r.lhs, T.gpd().size());
  r.vormula = vorm.is_subset_of(rec_prime);
  r.vormula_eq = vorm == rec_prime;
  const Subset borm = image(P.Pi, preimage(va.gvm.Gamma, r.rhs), S.gpd().size());
  r.bormula = rec.is_subset_of(borm);
  r.bormula_eq = rec == borm;
  return r;
}

CheckReport thm_color_check(const GVMOfActions& va) {
  const Action& S = *va.source;
  const Action& T = *va.target;
  CheckReport rep;
  const bool hyp = equality_hypotheses(va);
  rep.hypothesis("Gamma_surjective_h_gamma_injective", hyp);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    const Subset O = orbit(S, s);
    const Subset Op = orbit(T, va.h[s]);
    const Subset hO = image(va.h, O, T.size());
    rep.require("(i) h(O)<=O'", hO.is_subset_of(Op), [&] { return at; });
    rep.require("(i) h(cl O)<=cl O'",
                image(va.h, S.space().closure(O), T.size()).is_subset_of(T.space().closure(Op)),
                [&] { return at; });
    rep.require_if("(ii) h(O)=O'", hyp, hO == Op, [&] { return at; });
  }
  for (const auto& M : invariant_sets(S)) {
    rep.require_if("(ii) h(invariant) invariant", hyp, is_invariant(T, image(va.h, M, T.size())),
                   [&] { return "M=" + to_string(M); });
  }
  for (const auto& B : invariant_sets(T)) {
    rep.require("(iii) h^-1(invariant) invariant", is_invariant(S, preimage(va.h, B)),
                [&] { return "B'=" + to_string(B); });
  }
  return rep;
}

std::vector<Subset> minimal_sets(const Action& a) {
  std::vector<Subset> out;
  for (auto& M : invariant_sets(a)) {
    if (is_minimal_set(a, M)) out.push_back(std::move(M));
  }
  return out;
}

CheckReport transport_profile(const GVMOfActions& va, const Bornology& arrows,
                              const Bornology& arrows_prime) {
  const Action& S = *va.source;
  const Action& T = *va.target;
  CheckReport rep(arrows.is_all() && arrows_prime.is_all() ? Mode::faithful : Mode::model_level);
  const bool surj = is_surjective(va.h, T.size());
  rep.hypothesis("h_surjective", surj);
  const bool open = is_open_groupoid(S.gpd());
  const bool open_prime = is_open_groupoid(T.gpd());
  rep.hypothesis("d_open", open);
  rep.hypothesis("d_prime_open", open_prime);
  if (surj) {
    const DynProfile p = classify(S);
    const DynProfile q = classify(T);
    rep.require_if("secinta(i) T", p.T, q.T);
    rep.require_if("secinta(i) PT", p.PT, q.PT);
    rep.require_if("secinta(ii) WPT", p.WPT, q.WPT);
    rep.require_if("secinta(iii) TT1", p.TT1, q.TT1);
    rep.require_if("secinta(iii) TT2", p.TT2, q.TT2);
    rep.require_if("securinta RT", p.RT, q.RT);
    rep.require_if("cudat TT3 (d, d' open)", open && open_prime && p.TT3, q.TT3);
    const auto mins = minimal_sets(S);
    for (const auto& M : mins) {
      const Subset hM = image(va.h, M, T.size());
      rep.require_if("secinta(iv) minimal image", T.space().is_closed(hM), is_minimal_set(T, hM),
                     [&] { return "M=" + to_string(M) + " h(M)=" + to_string(hM); });
    }
    for (const auto& Mp : minimal_sets(T)) {
      bool found = false;
      for (const auto& M : mins) {
        if (image(va.h, M, T.size()) == Mp) {
          found = true;
          break;
        }
      }
      rep.require("garbanzos minimal preimage", found,
                  [&] { return "M'=" + to_string(Mp) + " has no minimal M with h(M)=M'"; });
    }
  } else {
    for (const char* c : {"secinta(i) T", "secinta(i) PT", "secinta(ii) WPT", "secinta(iii) TT1",
                          "secinta(iii) TT2", "securinta RT", "cudat TT3 (d, d' open)",
                          "secinta(iv) minimal image", "garbanzos minimal preimage"}) {
      rep.not_applicable(c);
    }
  }
  // Finite groupoids are locally compact and second countable.
  const bool gog = equality_hypotheses(va) && open_prime;
  rep.hypothesis("gogonata_rolar", gog);
  const Subset per = periodic_points(S, arrows);
  const Subset per_p = periodic_points(T, arrows_prime);
  const Subset alp = almost_periodic_points(S, arrows);
  const Subset alp_p = almost_periodic_points(T, arrows_prime);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    rep.require_if("gogonata periodic", gog && per.test(s), per_p.test(va.h[s]), [&] { return at; });
    rep.require_if("rolar almost_periodic", gog && alp.test(s), alp_p.test(va.h[s]),
                   [&] { return at; });
  }
  return rep;
}

CheckReport transport_profile(const GVMOfActions& va) {
  return transport_profile(va, Bornology::all_subsets(va.source->gpd().size()),
                           Bornology::all_subsets(va.target->gpd().size()));
}

VagueBornologies VagueBornologies::all(const GVMOfActions& va) {
  return {Bornology::all_subsets(va.source->gpd().size()),
          Bornology::all_subsets(va.target->gpd().size()),
          Bornology::all_subsets(va.gvm.pb.aspace.size()),
          Bornology::all_subsets(va.gvm.pb_prime.aspace.size()),
          Bornology::all_subsets(va.source->gpd().unit_count()),
          Bornology::all_subsets(va.target->gpd().unit_count())};
}

bool VagueBornologies::all_subsets() const {
  return arrows.is_all() && arrows_prime.is_all() && A.is_all() && A_prime.is_all() &&
         X.is_all() && X_prime.is_all();
}

CheckReport prop_rollar_check(const GVMOfActions& va, const VagueBornologies& b) {
  const Action& S = *va.source;
  const Action& T = *va.target;
  const auto& P = va.gvm.pb;
  const auto& Q = va.gvm.pb_prime;
  CheckReport rep(b.all_subsets() ? Mode::faithful : Mode::model_level);
  const bool gsurj = is_surjective(va.gvm.Gamma, Q.triples.size());
  const bool pinj = is_injective(P.pi);
  const bool pprop = is_proper(to_positions(S.gpd(), P.pi), b.A, b.X);
  const Table pg = compose(Q.pi, va.gvm.gamma);
  const bool pginj = is_injective(pg);
  rep.hypothesis("Gamma_surjective", gsurj);
  rep.hypothesis("pi_injective", pinj);
  rep.hypothesis("pi_proper", pprop);
  rep.hypothesis("pi_prime_gamma_injective", pginj);
  const bool gate = gsurj && pinj && pprop && pginj;
  const Table G2 = va.gvm.Gamma2();
  for (Index a = 0; a < P.aspace.size(); ++a) {
    const Subset lhs = image(G2, source_fiber(*P.realized, P.unit_of[a]), T.gpd().size());
    const bool ok = gate && lhs == source_fiber(T.gpd(), pg[a]);
    rep.require_if("sprejos", gate, ok, [&] { return "b=" + P.aspace.label(a); });
  }
  if (gate) {
    Table pinv(S.gpd().size(), kNone);
    for (Index a = 0; a < P.aspace.size(); ++a) pinv[P.pi[a]] = a;
    for (Index s = 0; s < S.size(); ++s) {
      rep.require("translates", pg[pinv[S.anchor(s)]] == T.anchor(va.h[s]),
                  [&] { return "sigma=" + S.space().label(s); });
    }
  } else {
    rep.not_applicable("translates");
  }
  const Subset alp = almost_periodic_points(S, b.arrows);
  const Subset alp_p = almost_periodic_points(T, b.arrows_prime);
  const Subset per = periodic_points(S, b.arrows);
  const Subset per_p = periodic_points(T, b.arrows_prime);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    rep.require_if("(i) almost_periodic", gate && alp.test(s), alp_p.test(va.h[s]), [&] { return at; });
    rep.require_if("(ii) periodic", gate && per.test(s), per_p.test(va.h[s]), [&] { return at; });
  }
  return rep;
}

CheckReport prop_caciu_check(const GVMOfActions& va, const VagueBornologies& b) {
  const Action& S = *va.source;
  const Action& T = *va.target;
  const auto& P = va.gvm.pb;
  const auto& Q = va.gvm.pb_prime;
  CheckReport rep(b.all_subsets() ? Mode::faithful : Mode::model_level);
  const Bornology bP = pullback_bornology(P, b.A, b.arrows);
  const Bornology bQ = pullback_bornology(Q, b.A_prime, b.arrows_prime);
  const bool g_proper = is_proper(va.gvm.Gamma, bP, bQ);
  const bool pp_proper = is_proper(to_positions(T.gpd(), Q.pi), b.A_prime, b.X_prime);
  // Finite-model stand-ins for Lemma joser and continuity of Pi.
  const bool Pp_proper = is_proper(Q.Pi, bQ, b.arrows_prime);
  const bool Pi_bounded = b.arrows.is_bounded(image(P.Pi, bP.bound(), S.gpd().size()));
  rep.hypothesis("Gamma_proper", g_proper);
  rep.hypothesis("pi_prime_proper", pp_proper);
  rep.hypothesis("Pi_prime_proper", Pp_proper);
  rep.hypothesis("Pi_bounded", Pi_bounded);
  const bool gate = g_proper && pp_proper && Pp_proper && Pi_bounded;
  const Subset rec = recurrent_points(S, b.arrows);
  const Subset rec_p = recurrent_points(T, b.arrows_prime);
  const Subset nw = ~wandering_points(S, b.arrows);
  const Subset nw_p = ~wandering_points(T, b.arrows_prime);
  for (Index s = 0; s < S.size(); ++s) {
    const std::string at = "sigma=" + S.space().label(s);
    const Subset L = limit_set(S, s, b.arrows);
    const Subset Lp = limit_set(T, va.h[s], b.arrows_prime);
    rep.require_if("h(L)<=L'", gate && L.any(), image(va.h, L, T.size()).is_subset_of(Lp),
                   [&] { return at; });
    rep.require_if("recurrent", gate && rec.test(s), rec_p.test(va.h[s]), [&] { return at; });
    rep.require_if("nonwandering", gate && nw.test(s), nw_p.test(va.h[s]), [&] { return at; });
  }
  return rep;
}

}  // namespace gd
