#include "gd/verify.hpp"

#include <algorithm>
#include <array>

#include "gd/dynamics.hpp"
#include "gd/iso.hpp"
#include "gd/sweep.hpp"

namespace gd {

namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  const char* kind;
};

const std::vector<TheoremInfo>& catalog() {
  using T = TheoremId;
  static const std::vector<TheoremInfo> c = {
      {T::label, "label", "action_morphism"},
      {T::inzbor, "inzbor", "gvm_action"},
      {T::both, "both", "gvm_action"},
      {T::stift, "stift", "gvm_action"},
      {T::securinta, "securinta", "gvm_action"},
      {T::color, "color", "gvm_action"},
      {T::secinta, "secinta", "gvm_action"},
      {T::garbanzos, "garbanzos", "gvm_action"},
      {T::gogonata, "gogonata", "gvm_action"},
      {T::rolar, "rolar", "gvm_action"},
      {T::rollar, "rollar", "gvm_action"},
      {T::caciu, "caciu", "gvm_action"},
      {T::liema, "liema", "actor_action"},
      {T::jnitzel, "jnitzel", "actor_action"},
      {T::sentinta, "sentinta", "actor_action"},
      {T::sentintaa, "sentintaa", "actor_action"},
      {T::siaia, "siaia", "actor_action"},
      {T::siaia2, "siaia2", "actor_action"},
      {T::transflim, "transflim", "actor_action"},
      {T::saspermam, "saspermam", "actor_action"},
      {T::constant, "constant", "actor_action"},
      {T::miraj, "miraj", "action_morphism"},
      {T::image, "image", "action_morphism"},
      {T::structure, "structure", "actor_action"},
      {T::enfin, "enfin", "actor"},
      {T::prostie, "prostie", "action"},
      {T::flacara, "flacara", "action"},
      {T::caofi, "caofi", "action"},
      {T::joser, "joser", "gvm_action"},
      {T::vasnatoare_formula, "vasnatoare_formula", "action"},
      {T::valtoare_formula, "valtoare_formula", "groupoid"},
      {T::myex_iso, "myex_iso", "groupoid"},
      {T::saex_identity, "saex_identity", "groupoid"},
      {T::commut, "commut", "actor"},
      {T::furnal_iso, "furnal_iso", "groupoid"},
  };
  return c;
}

const TheoremInfo& info(TheoremId t) { return catalog()[static_cast<std::size_t>(t)]; }

std::string sweep_name(std::size_t n, int samples) {
  return n <= kExhaustiveSweep ? "exhaustive" : "sampled(" + std::to_string(samples) + ")";
}

std::string pair_witness(const Subset& M, const Subset& N) {
  return "M=" + to_string(M) + " N=" + to_string(N);
}

/// Clause tallies over many sub-reports: a clause holds if it held somewhere
/// and never failed; the first failure is kept.
class Accumulator {
 public:
  void add(const CheckReport& r) {
    for (const auto& h : r.hypotheses()) {
      auto [it, fresh] = hyps_.try_emplace(h.name, h.met);
      if (fresh) hyp_order_.push_back(h.name);
      else it->second = it->second || h.met;
    }
    for (const auto& c : r.clauses()) {
      auto [it, fresh] = clauses_.try_emplace(c.name, c);
      if (fresh) {
        order_.push_back(c.name);
        continue;
      }
      Clause& cur = it->second;
      if (cur.status == Status::violated) continue;
      if (c.status == Status::violated || (c.status == Status::holds && cur.status == Status::not_applicable))
        cur = c;
    }
    if (r.mode() == Mode::model_level) mode_ = Mode::model_level;
  }
  CheckReport report() const {
    CheckReport out(mode_);
    for (const auto& h : hyp_order_) out.hypothesis(h, hyps_.at(h));
    for (const auto& n : order_) {
      const Clause& c = clauses_.at(n);
      if (c.status == Status::not_applicable) out.not_applicable(n);
      else out.require(n, c.status == Status::holds, [&] { return c.witness; });
    }
    return out;
  }

 private:
  Mode mode_ = Mode::faithful;
  std::vector<std::string> hyp_order_, order_;
  std::map<std::string, bool> hyps_;
  std::map<std::string, Clause> clauses_;
};

CheckReport with_prefix(const CheckReport& r, std::initializer_list<const char*> prefixes) {
  return r.select([&](const std::string& n) {
    for (const char* p : prefixes)
      if (n.rfind(p, 0) == 0) return true;
    return false;
  });
}

Bornology arrows_bornology(const std::string& spec, const Groupoid& g) {
  return parse_bornology(spec, g.arrows());
}

bool same_morphism(const ActionMorphism& a, const ActionMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.psi == b.psi && a.f == b.f;
}

// --- action_morphism ---

CheckReport check_label(const ActionMorphism& m, const VerifyOptions& o, std::string* sweep) {
  CheckReport rep;
  const std::size_t n = m.source->size();
  *sweep = sweep_name(n, o.samples);
  const Subset none(n);
  const bool eq = transport_recurrence(m, none, none).equality_hypotheses_met;
  rep.hypothesis("Psi_surjective_psi_f_injective", eq);
  std::string incl_w, eq_w;
  sweep_pairs(n, o.seed, o.samples, [&](const Subset& M, const Subset& N) {
    const auto tr = transport_recurrence(m, M, N);
    if (!tr.inclusion && incl_w.empty()) incl_w = pair_witness(M, N);
    if (eq && !tr.equality && eq_w.empty()) eq_w = pair_witness(M, N);
    return true;
  });
  rep.require("inclusion", incl_w.empty(), [&] { return incl_w; });
  rep.require_if("equality", eq, eq_w.empty(), [&] { return eq_w; });
  return rep;
}

bool psi_homeomorphism(const ActionMorphism& m) {
  return is_homeomorphism(m.source->gpd().unit_space(), m.target->gpd().unit_space(),
                          unit_map_positions(m.source->gpd(), m.target->gpd(), m.psi));
}

CheckReport check_miraj(const ActionMorphism& m) {
  CheckReport rep;
  const bool hom = psi_homeomorphism(m);
  rep.hypothesis("psi_homeomorphism", hom);
  if (!hom) {
    rep.not_applicable("morphism round trip");
    rep.not_applicable("actor round trip");
    return rep;
  }
  const ActorOfActions pa = miraj_to_actor(m);
  const ActionMorphism m2 = miraj_to_morphism(pa);
  rep.require("morphism round trip", same_morphism(m, m2));
  const ActorOfActions pa2 = miraj_to_actor(m2);
  rep.require("actor round trip", pa2.actor == pa.actor && pa2.g == pa.g &&
                                      *pa2.source == *pa.source && *pa2.target == *pa.target);
  return rep;
}

CheckReport check_image(const ActionMorphism& m) {
  const bool hom = psi_homeomorphism(m);
  if (!hom) {
    CheckReport rep;
    rep.hypothesis("psi_homeomorphism", false);
    rep.not_applicable("Psi(Xi)=Sat(X')");
    rep.not_applicable("epi<=>g_surjective&saturated");
    return rep;
  }
  CheckReport rep = image_saturation_check(m, miraj_to_actor(m));
  CheckReport out;
  out.hypothesis("psi_homeomorphism", true);
  out.merge(rep);
  return out;
}

// --- gvm_action ---

CheckReport check_inzbor(const GVMOfActions& va, const VerifyOptions& o, std::string* sweep) {
  CheckReport rep;
  for (const auto* pa : {&va.pa, &va.pa_prime}) {
    const std::size_t n = pa->source->size();
    if (pa == &va.pa) *sweep = sweep_name(n, o.samples);
    std::string w;
    sweep_pairs(n, o.seed, o.samples, [&](const Subset& M, const Subset& N) {
      if (pullback_recurrence_identity(*pa, M, N)) return true;
      w = pair_witness(M, N);
      return false;
    });
    rep.require(pa == &va.pa ? "identity" : "identity (target)", w.empty(), [&] { return w; });
  }
  return rep;
}

CheckReport check_both(const GVMOfActions& va, const VerifyOptions& o, std::string* sweep,
                       bool stift) {
  CheckReport rep;
  const std::size_t n = va.source->size();
  *sweep = sweep_name(n, o.samples);
  const bool eq = equality_hypotheses(va);
  rep.hypothesis("Gamma_surjective_h_gamma_injective", eq);
  std::array<std::string, 4> w;  // inclusion/vormula, equality/bormula, vormula_eq, bormula_eq
  sweep_pairs(n, o.seed, o.samples, [&](const Subset& M, const Subset& N) {
    const ThmBoth b = thm_both_check(va, M, N);
    const std::array<bool, 4> ok =
        stift ? std::array<bool, 4>{b.vormula, b.bormula, !eq || b.vormula_eq, !eq || b.bormula_eq}
              : std::array<bool, 4>{b.inclusion, !eq || b.equality, true, true};
    for (std::size_t i = 0; i < 4; ++i)
      if (!ok[i] && w[i].empty()) w[i] = pair_witness(M, N);
    return true;
  });
  if (stift) {
    rep.require("vormula", w[0].empty(), [&] { return w[0]; });
    rep.require("bormula", w[1].empty(), [&] { return w[1]; });
    rep.require_if("vormula equality", eq, w[2].empty(), [&] { return w[2]; });
    rep.require_if("bormula equality", eq, w[3].empty(), [&] { return w[3]; });
  } else {
    rep.require("inclusion", w[0].empty(), [&] { return w[0]; });
    rep.require_if("equality", eq, w[1].empty(), [&] { return w[1]; });
  }
  return rep;
}

VagueBornologies vague_bornologies(const GVMOfActions& va, const std::string& spec) {
  VagueBornologies b = VagueBornologies::all(va);
  b.arrows = arrows_bornology(spec, va.source->gpd());
  return b;
}

CheckReport check_joser(const GVMOfActions& va, const std::string& spec) {
  CheckReport rep;
  const auto& P = va.gvm.pb;
  const auto& Q = va.gvm.pb_prime;
  const Bornology arrows = arrows_bornology(spec, va.source->gpd());
  const Bornology A = Bornology::all_subsets(P.aspace.size());
  const Bornology X = Bornology::all_subsets(va.source->gpd().unit_count());
  rep.merge(pullback_proper_check(P, A, X, arrows, pullback_bornology(P, A, arrows)));
  const Bornology arrows_p = Bornology::all_subsets(va.target->gpd().size());
  const Bornology Ap = Bornology::all_subsets(Q.aspace.size());
  const Bornology Xp = Bornology::all_subsets(va.target->gpd().unit_count());
  rep.merge(pullback_proper_check(Q, Ap, Xp, arrows_p, pullback_bornology(Q, Ap, arrows_p)),
            "target ");
  return rep;
}

// --- actor_action ---

CheckReport check_liema(const ActorOfActions& pa, const VerifyOptions& o, std::string* sweep) {
  CheckReport rep;
  const std::size_t n = pa.source->size();
  *sweep = sweep_name(n, o.samples);
  const Subset none(n);
  const bool eq = liema_check(pa, none, none).eq_hyp;
  rep.hypothesis("saturated_g_injective", eq);
  std::string incl_w, eq_w;
  sweep_pairs(n, o.seed, o.samples, [&](const Subset& M, const Subset& N) {
    const Liema l = liema_check(pa, M, N);
    if (!l.inclusion && incl_w.empty()) incl_w = pair_witness(M, N);
    if (eq && !l.equality && eq_w.empty()) eq_w = pair_witness(M, N);
    return true;
  });
  rep.require("inclusion", incl_w.empty(), [&] { return incl_w; });
  rep.require_if("equality", eq, eq_w.empty(), [&] { return eq_w; });
  return rep;
}

CheckReport check_saspermam(const ActorOfActions& pa) {
  CheckReport rep;
  auto valid = [](const ActorOfActions& x) { return !validate_actor_of_actions(x); };
  auto same = [](const ActorOfActions& x, const ActorOfActions& y) {
    return x.actor == y.actor && *x.source == *y.source && *x.target == *y.target && x.g == y.g;
  };
  auto attempt = [&](const char* name, auto&& make) -> std::optional<ActorOfActions> {
    try {
      ActorOfActions c = make();
      rep.require(name, valid(c));
      return c;
    } catch (const Error& e) {
      rep.require(name, false, [&] { return std::string(e.what()); });
      return std::nullopt;
    }
  };
  const auto left = attempt("identity o pa validates", [&] {
    return compose_actor_of_actions(identity_actor_of_actions(pa.target), pa);
  });
  const auto right = attempt("pa o identity validates", [&] {
    return compose_actor_of_actions(pa, identity_actor_of_actions(pa.source));
  });
  rep.require("identity neutral", left && right && same(*left, pa) && same(*right, pa));
  // fold: Theta + Theta -> Theta through the identity actor
  const ActionPtr sum = std::make_shared<const Action>(action_sum(*pa.source, *pa.source));
  Table fold(sum->size());
  for (Index s = 0; s < sum->size(); ++s) fold[s] = static_cast<Index>(s % pa.source->size());
  const ActorOfActions fold_pa{identity_actor(pa.source->gpd_ptr()), sum, pa.source, fold};
  // terminal: Theta' -> canonical action of Xi' through the identity actor
  const ActorOfActions term = miraj_to_actor(terminal_morphism(pa.target));
  const auto c1 = attempt("pa o fold validates", [&] { return compose_actor_of_actions(pa, fold_pa); });
  const auto c2 = attempt("terminal o pa validates", [&] { return compose_actor_of_actions(term, pa); });
  std::optional<ActorOfActions> a1, a2;
  if (c1) a1 = attempt("terminal o (pa o fold) validates", [&] { return compose_actor_of_actions(term, *c1); });
  if (c2) a2 = attempt("(terminal o pa) o fold validates", [&] { return compose_actor_of_actions(*c2, fold_pa); });
  rep.require("associativity", a1 && a2 && same(*a1, *a2));
  return rep;
}

CheckReport check_structure(const ActorOfActions& pa, const VerifyOptions& o, std::string* sweep) {
  Accumulator acc;
  acc.add(structure_check(pa));
  const Groupoid& T = *pa.actor.target;
  const auto& units = T.unit_list();
  *sweep = sweep_name(units.size(), o.samples);
  auto lift = [&](const Subset& pos) {
    Subset s(T.size());
    for_each_member(pos, [&](Index i) { s.set(units[i]); });
    return s;
  };
  sweep_pairs(units.size(), o.seed, o.samples, [&](const Subset& Y, const Subset& Z) {
    acc.add(structure_check(pa.actor, lift(Y), lift(Z)));
    return true;
  });
  return acc.report();
}

// --- actor ---

CheckReport check_commut(const Actor& phi) {
  CheckReport rep;
  const Groupoid& S = *phi.source;
  const Groupoid& T = *phi.target;
  Index bad = kNone;
  for (Index e = 0; e < T.size() && bad == kNone; ++e)
    if (phi.mu[e] != phi.nu(T.r(e))) bad = e;
  rep.require("mu = nu o r'", bad == kNone, [&] { return "eta'=" + T.label(bad); });
  std::string w;
  for (Index xi = 0; xi < S.size() && w.empty(); ++xi)
    for (Index e = 0; e < T.size() && w.empty(); ++e) {
      if (!phi.admissible(xi, e)) continue;
      for (Index z = 0; z < T.size() && w.empty(); ++z) {
        if (!T.composable(e, z)) continue;
        if (phi.apply(xi, T.mul(e, z)) != T.mul(phi.apply(xi, e), z))
          w = "xi=" + S.label(xi) + " eta'=" + T.label(e) + " zeta'=" + T.label(z);
      }
    }
  rep.require("right translations commute", w.empty(), [&] { return w; });
  return rep;
}

// --- action ---

CheckReport check_vasnatoare(const Action& a, const VerifyOptions& o, std::string* sweep) {
  CheckReport rep;
  const bool bundle = recognize(a.gpd()).is_group_bundle;
  rep.hypothesis("group_bundle", bundle);
  *sweep = sweep_name(a.size(), o.samples);
  rep.require_if("formula", bundle, bundle && recurrence_set_bundle_formula(a, o.seed, o.samples));
  return rep;
}

// --- groupoid ---

CheckReport check_myex(const GroupoidPtr& g) {
  CheckReport rep;
  const bool group = g->unit_count() == 1;
  rep.hypothesis("group", group);
  bool any = false;
  if (group) {
    const Index e = g->unit_list().front();
    for (std::size_t n = 1; g->size() * n * n <= kIsoArrowCap; ++n) {
      for (const FiniteSpace& D : {FiniteSpace::discrete(n), FiniteSpace::indiscrete(n)}) {
        if (n == 1 && !D.is_discrete()) continue;
        const Table pi(n, e);
        const auto pb = build_pullback(g, D, pi);
        const Groupoid prod = product_groupoid(*g, pair_groupoid(D));
        const std::string name = std::string("pullback ~ group x pair(") +
                                 (D.is_discrete() ? "discrete " : "indiscrete ") +
                                 std::to_string(n) + ")";
        rep.require(name, are_isomorphic(*pb.realized, prod));
        any = true;
      }
    }
  }
  if (!any) rep.not_applicable("pullback ~ group x pair");
  return rep;
}

CheckReport check_saex(const GroupoidPtr& g, std::uint64_t seed) {
  CheckReport rep;
  Rng rng(seed);
  Table pi;
  for (Index x : g->unit_list()) {
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    for (std::size_t t = 0; t < c; ++t) pi.push_back(x);
  }
  const auto pb = build_pullback(g, FiniteSpace::discrete(pi.size()), pi);
  const ActionPtr can = std::make_shared<const Action>(canonical_action(g));
  const auto pa = build_pullback_action(can, pb);
  std::string w;
  for (Index t = 0; t < pb.triples.size() && w.empty(); ++t) {
    const auto [a, xi, b] = pb.triples[t];
    const Index from = pa.find(g->unit_position(pi[b]), b);
    const Index to = pa.find(g->unit_position(pi[a]), a);
    if (pa.realized->act(t, from) != to) w = "triple=" + pb.realized->label(t);
  }
  rep.require("(a,xi,b)*b=a", w.empty(), [&] { return w; });
  return rep;
}

CheckReport check_furnal(const GroupoidPtr& g) {
  CheckReport rep;
  const bool small = g->size() <= kIsoArrowCap;
  rep.hypothesis("at_most_12_arrows", small);
  rep.require_if("pullback over id ~ original", small,
                 small && are_isomorphic(*pullback_over_identity(g).realized, *g));
  return rep;
}

template <class T>
const T& expect(const Instance& inst, TheoremId t) {
  if (const T* p = std::get_if<T>(&inst)) return *p;
  throw Error(std::string("theorem ") + to_string(t) + " expects a " + instance_kind(t) +
              " instance, got " + kind_of(inst));
}

CheckReport dispatch(TheoremId t, const Instance& inst, const VerifyOptions& o, std::string* sweep) {
  using T = TheoremId;
  switch (t) {
    case T::label: return check_label(expect<ActionMorphism>(inst, t), o, sweep);
    case T::miraj: return check_miraj(expect<ActionMorphism>(inst, t));
    case T::image: return check_image(expect<ActionMorphism>(inst, t));
    case T::inzbor: return check_inzbor(expect<GVMOfActions>(inst, t), o, sweep);
    case T::both: return check_both(expect<GVMOfActions>(inst, t), o, sweep, false);
    case T::stift: return check_both(expect<GVMOfActions>(inst, t), o, sweep, true);
    case T::color: return thm_color_check(expect<GVMOfActions>(inst, t));
    case T::secinta: return with_prefix(transport_profile(expect<GVMOfActions>(inst, t)), {"secinta", "cudat"});
    case T::securinta: return with_prefix(transport_profile(expect<GVMOfActions>(inst, t)), {"securinta"});
    case T::garbanzos: return with_prefix(transport_profile(expect<GVMOfActions>(inst, t)), {"garbanzos"});
    case T::gogonata: return with_prefix(transport_profile(expect<GVMOfActions>(inst, t)), {"gogonata"});
    case T::rolar: return with_prefix(transport_profile(expect<GVMOfActions>(inst, t)), {"rolar"});
    case T::rollar: {
      const auto& va = expect<GVMOfActions>(inst, t);
      return prop_rollar_check(va, vague_bornologies(va, o.bornology));
    }
    case T::caciu: {
      const auto& va = expect<GVMOfActions>(inst, t);
      return prop_caciu_check(va, vague_bornologies(va, o.bornology));
    }
    case T::joser: return check_joser(expect<GVMOfActions>(inst, t), o.bornology);
    case T::liema: return check_liema(expect<ActorOfActions>(inst, t), o, sweep);
    case T::jnitzel: return with_prefix(jnitzel_transport(expect<ActorOfActions>(inst, t)), {"(i)", "(ii)", "(iii)"});
    case T::sentinta: return with_prefix(jnitzel_transport(expect<ActorOfActions>(inst, t)), {"sentinta "});
    case T::sentintaa: return with_prefix(jnitzel_transport(expect<ActorOfActions>(inst, t)), {"sentintaa"});
    case T::siaia: return with_prefix(jnitzel_transport(expect<ActorOfActions>(inst, t)), {"siaia "});
    case T::siaia2: return with_prefix(jnitzel_transport(expect<ActorOfActions>(inst, t)), {"siaia2"});
    case T::transflim: {
      const auto& pa = expect<ActorOfActions>(inst, t);
      return transflim_check(pa, arrows_bornology(o.bornology, *pa.actor.source),
                             Bornology::all_subsets(pa.actor.target->size()));
    }
    case T::saspermam: return check_saspermam(expect<ActorOfActions>(inst, t));
    case T::constant: {
      const auto& pa = expect<ActorOfActions>(inst, t);
      return lemma_constant_check(pa.actor, &pa);
    }
    case T::structure: return check_structure(expect<ActorOfActions>(inst, t), o, sweep);
    case T::enfin: return enfin_check(expect<Actor>(inst, t));
    case T::commut: return check_commut(expect<Actor>(inst, t));
    case T::prostie: return audit_implications(*expect<ActionPtr>(inst, t));
    case T::flacara: {
      const auto& a = *expect<ActionPtr>(inst, t);
      return flacara_check(a, arrows_bornology(o.bornology, a.gpd()));
    }
    case T::caofi: return caofi_check(*expect<ActionPtr>(inst, t));
    case T::vasnatoare_formula: return check_vasnatoare(*expect<ActionPtr>(inst, t), o, sweep);
    case T::valtoare_formula: {
      const auto& g = expect<GroupoidPtr>(inst, t);
      CheckReport rep;
      *sweep = sweep_name(g->size(), o.samples);
      rep.require("formula", self_action_formula(g, o.seed, o.samples));
      return rep;
    }
    case T::myex_iso: return check_myex(expect<GroupoidPtr>(inst, t));
    case T::saex_identity: return check_saex(expect<GroupoidPtr>(inst, t), o.seed);
    case T::furnal_iso: return check_furnal(expect<GroupoidPtr>(inst, t));
  }
  throw Error("unknown theorem");
}

// --- minimization ---

Table inverse_embedding(const Table& emb, std::size_t n) {
  Table inv(n, kNone);
  for (Index i = 0; i < emb.size(); ++i) inv[emb[i]] = i;
  return inv;
}

Table restrict_map(const Table& f, const Table& src_emb, const Table& tgt_inv) {
  Table out(src_emb.size());
  for (Index i = 0; i < src_emb.size(); ++i) {
    const Index v = tgt_inv[f[src_emb[i]]];
    if (v == kNone) throw Error("restriction leaves the target");
    out[i] = v;
  }
  return out;
}

/// Orbit-removal candidates: drop a source orbit, or a target orbit with its preimage.
template <class Rebuild>
std::vector<Instance> shrink_pair(const Action& S, const Action& T, const Table& f, Rebuild&& rebuild) {
  std::vector<Instance> out;
  const auto so = orbits(S);
  if (so.size() > 1) {
    for (const auto& O : so) {
      try {
        Table emb;
        Action s2 = sub_action(S, ~O, &emb);
        out.push_back(rebuild(std::make_shared<const Action>(std::move(s2)), nullptr, emb,
                              identity_table(T.size())));
      } catch (const Error&) {
      }
    }
  }
  const auto to = orbits(T);
  if (to.size() > 1) {
    for (const auto& O : to) {
      try {
        const Subset pre = preimage(f, O);
        if (pre.count() == S.size()) continue;
        Table es, et;
        Action s2 = sub_action(S, ~pre, &es);
        Action t2 = sub_action(T, ~O, &et);
        out.push_back(rebuild(std::make_shared<const Action>(std::move(s2)),
                              std::make_shared<const Action>(std::move(t2)), es,
                              inverse_embedding(et, T.size())));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

std::vector<Instance> shrink_candidates(const Instance& inst) {
  std::vector<Instance> out;
  if (const auto* a = std::get_if<ActionPtr>(&inst)) {
    const auto orbs = orbits(**a);
    if (orbs.size() > 1) {
      for (const auto& O : orbs) {
        try {
          out.push_back(std::make_shared<const Action>(sub_action(**a, ~O)));
        } catch (const Error&) {
        }
      }
    }
  } else if (const auto* m = std::get_if<ActionMorphism>(&inst)) {
    out = shrink_pair(*m->source, *m->target, m->f,
                      [&](ActionPtr s, ActionPtr t, const Table& es, const Table& tinv) -> Instance {
                        return ActionMorphism{s, t ? t : m->target, m->psi, restrict_map(m->f, es, tinv)};
                      });
  } else if (const auto* va = std::get_if<GVMOfActions>(&inst)) {
    const auto& v = va->gvm;
    out = shrink_pair(*va->source, *va->target, va->h,
                      [&](ActionPtr s, ActionPtr t, const Table& es, const Table& tinv) -> Instance {
                        return make_gvm_action(s, t ? t : va->target, v.pb.aspace, v.pb.pi,
                                               v.pb_prime.aspace, v.pb_prime.pi, v.gamma, v.Gamma,
                                               restrict_map(va->h, es, tinv));
                      });
  } else if (const auto* pa = std::get_if<ActorOfActions>(&inst)) {
    out = shrink_pair(*pa->source, *pa->target, pa->g,
                      [&](ActionPtr s, ActionPtr t, const Table& es, const Table& tinv) -> Instance {
                        return ActorOfActions{pa->actor, s, t ? t : pa->target, restrict_map(pa->g, es, tinv)};
                      });
  }
  return out;
}

std::size_t instance_weight(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, ActionPtr>) return x->size();
        else if constexpr (std::is_same_v<X, ActionMorphism> || std::is_same_v<X, GVMOfActions> ||
                           std::is_same_v<X, ActorOfActions>)
          return x.source->size() + x.target->size();
        else return 0;
      },
      inst);
}

std::string first_witness(const CheckReport& r) {
  const Clause* c = r.first_violation();
  if (!c) return {};
  return c->witness.empty() ? c->name : c->name + ": " + c->witness;
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& i : catalog()) v.push_back(i.id);
    return v;
  }();
  return ids;
}

const char* to_string(TheoremId t) { return info(t).name; }
const char* instance_kind(TheoremId t) { return info(t).kind; }

std::optional<TheoremId> theorem_from_string(std::string_view s) {
  for (const auto& i : catalog())
    if (s == i.name) return i.id;
  return std::nullopt;
}

std::vector<TheoremId> parse_theorems(const std::string& text) {
  std::vector<TheoremId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string name = text.substr(pos, end - pos);
    if (!name.empty()) {
      const auto t = theorem_from_string(name);
      if (!t) throw Error("unknown theorem: " + name);
      out.push_back(*t);
    }
    pos = end + 1;
  }
  return out;
}

bool Verdict::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.met; });
}

json to_json(const Verdict& v) {
  json j;
  j["theorem"] = to_string(v.theorem);
  j["status"] = to_string(v.status);
  j["mode"] = to_string(v.mode);
  j["hypotheses"] = json::array();
  for (const auto& h : v.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"met", h.met}});
  j["clauses"] = json::array();
  for (const auto& c : v.clauses) {
    json cj = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    j["clauses"].push_back(cj);
  }
  if (v.witness) j["witness"] = *v.witness;
  j["bornology"] = v.bornology;
  j["sweep"] = v.sweep;
  if (v.minimized) j["minimized"] = *v.minimized;
  if (v.minimized_witness) j["minimized_witness"] = *v.minimized_witness;
  return j;
}

Verdict verify(TheoremId t, const Instance& inst, const VerifyOptions& opts) {
  Verdict v;
  v.theorem = t;
  v.bornology = opts.bornology;
  const CheckReport rep = dispatch(t, inst, opts, &v.sweep);
  v.status = rep.status();
  v.mode = rep.mode();
  v.hypotheses = rep.hypotheses();
  v.clauses = rep.clauses();
  if (v.status == Status::violated) v.witness = first_witness(rep);
  if (v.status == Status::violated && opts.minimize) {
    VerifyOptions inner = opts;
    inner.minimize = false;
    Instance cur = inst;
    std::optional<Verdict> best;
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& cand : shrink_candidates(cur)) {
        if (instance_weight(cand) >= instance_weight(cur) || validate_instance(cand)) continue;
        try {
          Verdict w = verify(t, cand, inner);
          if (w.status != Status::violated) continue;
          cur = std::move(cand);
          best = std::move(w);
          progress = true;
          break;
        } catch (const Error&) {
        }
      }
    }
    if (best) {
      v.minimized = to_json(cur);
      v.minimized_witness = best->witness;
    }
  }
  return v;
}

// --- suite ---

std::uint64_t cell_seed(std::uint64_t seed, TheoremId t, std::size_t k) {
  // splitmix64 over the three inputs
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(t)) ^ k);
}

Instance suite_instance(TheoremId t, std::uint64_t seed, std::size_t k) {
  using T = TheoremId;
  Rng rng(seed);
  GenOptions o;
  o.topo = static_cast<Topo>(k % 3);
  const bool even = k % 2 == 0;
  switch (t) {
    case T::label:
      o.steer = even ? Steer::equality : Steer::none;
      return gen_morphism(rng, o);
    case T::miraj:
    case T::image:
      o.steer = Steer::eligible;
      return gen_morphism(rng, o);
    case T::both:
    case T::stift:
    case T::color:
      o.steer = even ? Steer::equality : Steer::none;
      return gen_gvm_action(rng, o);
    case T::secinta:
    case T::securinta:
    case T::garbanzos:
      o.steer = Steer::surjective;
      return gen_gvm_action(rng, o);
    case T::gogonata:
    case T::rolar:
      o.steer = Steer::equality;
      return gen_gvm_action(rng, o);
    case T::rollar:
      o.steer = even ? Steer::eligible : Steer::none;
      return gen_gvm_action(rng, o);
    case T::inzbor:
    case T::caciu:
    case T::joser:
      return gen_gvm_action(rng, o);
    case T::liema:
    case T::siaia:
    case T::siaia2:
    case T::constant:
    case T::structure:
      o.steer = even ? Steer::equality : Steer::none;
      return gen_actor_action(rng, o);
    case T::jnitzel:
      o.steer = std::array{Steer::none, Steer::equality, Steer::surjective}[k % 3];
      o.topo = static_cast<Topo>((k / 3) % 3);
      return gen_actor_action(rng, o);
    case T::sentinta:
    case T::sentintaa:
      o.steer = Steer::surjective;
      return gen_actor_action(rng, o);
    case T::transflim:
    case T::saspermam:
      return gen_actor_action(rng, o);
    case T::enfin:
      o.steer = even ? Steer::open_nondiscrete : Steer::equality;
      return gen_actor(rng, o);
    case T::commut:
      return gen_actor(rng, o);
    case T::prostie:
      o.steer = even ? Steer::open_nondiscrete : Steer::none;
      return gen_action(rng, o);
    case T::flacara:
    case T::caofi:
      return gen_action(rng, o);
    case T::vasnatoare_formula:
      o.steer = Steer::bundle;
      return gen_action(rng, o);
    case T::valtoare_formula:
      // even cells small enough for the exhaustive sweep
      if (even) o.max_arrows = kExhaustiveSweep;
      return gen_groupoid(rng, o);
    case T::saex_identity:
      return gen_groupoid(rng, o);
    case T::furnal_iso:
      o.max_arrows = kIsoArrowCap;
      return gen_groupoid(rng, o);
    case T::myex_iso: {
      GeneratorSpec spec;
      spec.kind = "group";
      spec.seed = seed;
      spec.topo = o.topo == Topo::random ? Topo::random : Topo::discrete;
      return generate(spec);
    }
  }
  throw Error("unknown theorem");
}

namespace {

bool takes_bornology(TheoremId t) {
  using T = TheoremId;
  return t == T::flacara || t == T::transflim || t == T::rollar || t == T::caciu || t == T::joser;
}

std::size_t source_arrows(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, ActionPtr>) return x->gpd().size();
        else if constexpr (std::is_same_v<X, GVMOfActions>) return x.source->gpd().size();
        else if constexpr (std::is_same_v<X, ActorOfActions>) return x.actor.source->size();
        else return 0;
      },
      inst);
}

struct Cell {
  TheoremId theorem;
  std::size_t k;
};

struct CellResult {
  std::optional<Verdict> verdict;
  std::string error;
};

std::vector<Cell> cells_of(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  const auto& ids = opts.filter.empty() ? all_theorems() : opts.filter;
  for (TheoremId t : ids)
    for (std::size_t k = 0; k < opts.count; ++k) cells.push_back({t, k});
  return cells;
}

CellResult run_cell(const SuiteOptions& opts, const Cell& c) {
  CellResult out;
  try {
    const std::uint64_t s = cell_seed(opts.seed, c.theorem, c.k);
    const Instance inst = suite_instance(c.theorem, s, c.k);
    VerifyOptions vo;
    vo.seed = s;
    vo.minimize = opts.minimize;
    if (opts.model_level && takes_bornology(c.theorem) && c.k % 4 == 3) {
      const std::size_t n = source_arrows(inst);
      vo.bornology = "core=" + std::to_string(s % n);
    }
    out.verdict = verify(c.theorem, inst, vo);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

SuiteReport aggregate(const SuiteOptions& opts, const std::vector<Cell>& cells,
                      const std::vector<CellResult>& results) {
  SuiteReport rep;
  rep.seed = opts.seed;
  rep.count = opts.count;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Tally& t = rep.theorems[to_string(cells[i].theorem)];
    const auto& r = results[i];
    if (!r.verdict) {
      ++t.errors;
      if (t.witnesses.size() < 3) t.witnesses.push_back("k=" + std::to_string(cells[i].k) + " error: " + r.error);
      continue;
    }
    const Verdict& v = *r.verdict;
    switch (v.status) {
      case Status::holds: ++t.holds; break;
      case Status::violated: ++t.violated; break;
      case Status::not_applicable: ++t.not_applicable; break;
    }
    if (v.mode == Mode::model_level) ++t.model_level;
    if (v.hypotheses_met()) ++t.hypotheses_met;
    for (const auto& c : v.clauses) ++t.clauses[c.name][static_cast<std::size_t>(c.status)];
    if (v.faithful_violation()) {
      ++t.faithful_violations;
      if (t.witnesses.size() < 3)
        t.witnesses.push_back("k=" + std::to_string(cells[i].k) + " " + v.witness.value_or(""));
    }
  }
  return rep;
}

}  // namespace

bool SuiteReport::faithful_violation() const {
  return std::any_of(theorems.begin(), theorems.end(), [](const auto& kv) {
    return kv.second.faithful_violations > 0 || kv.second.errors > 0;
  });
}

std::size_t SuiteReport::cells() const {
  std::size_t n = 0;
  for (const auto& [name, t] : theorems)
    n += t.holds + t.violated + t.not_applicable + t.errors;
  return n;
}

json to_json(const SuiteReport& r) {
  json j;
  j["seed"] = r.seed;
  j["count"] = r.count;
  j["cells"] = r.cells();
  j["faithful_violation"] = r.faithful_violation();
  json th = json::object();
  for (const auto& [name, t] : r.theorems) {
    json c = json::object();
    for (const auto& [cn, cnt] : t.clauses)
      c[cn] = {{"holds", cnt[0]}, {"violated", cnt[1]}, {"not_applicable", cnt[2]}};
    th[name] = {{"holds", t.holds},
                {"violated", t.violated},
                {"not_applicable", t.not_applicable},
                {"model_level", t.model_level},
                {"faithful_violations", t.faithful_violations},
                {"hypotheses_met", t.hypotheses_met},
                {"errors", t.errors},
                {"clauses", c},
                {"witnesses", t.witnesses}};
  }
  j["theorems"] = th;
  return j;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  const auto cells = cells_of(opts);
  std::vector<CellResult> results(cells.size());
  const auto n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) results[i] = run_cell(opts, cells[i]);
  return aggregate(opts, cells, results);
}

SuiteReport run_suite_serial(const SuiteOptions& opts) {
  const auto cells = cells_of(opts);
  std::vector<CellResult> results(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell(opts, cells[i]);
  return aggregate(opts, cells, results);
}

}  // namespace gd
