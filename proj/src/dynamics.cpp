#include "gd/dynamics.hpp"

namespace gd {

namespace {

Subset union_of(const std::vector<Subset>& parts, std::uint64_t mask, std::size_t n) {
  Subset out(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (mask >> i & 1u) out |= parts[i];
  }
  return out;
}

}  // namespace

std::vector<Subset> invariant_sets(const Action& a, std::size_t max_orbits) {
  const auto orb = orbits(a);
  if (orb.size() > max_orbits) {
    throw Error("too many orbits for invariant-set enumeration: " + std::to_string(orb.size()));
  }
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << orb.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orb.size()); ++mask) {
    out.push_back(union_of(orb, mask, a.size()));
  }
  return out;
}

DynProfile classify(const Action& a, std::size_t max_orbits) {
  const auto& sp = a.space();
  const std::size_t n = a.size();
  DynProfile p;
  const auto orb = orbits(a);
  p.T = orb.size() == 1;
  if (!p.T) p.witnesses["T"] = std::to_string(orb.size()) + " orbits";

  p.minimal = true;
  for (const auto& o : orb) {
    if (!sp.is_dense(o)) {
      p.minimal = false;
      p.witnesses["minimal"] = "orbit " + to_string(o) + " not dense";
      break;
    }
  }
  for (Index s = 0; s < n && !p.pt_witness; ++s) {
    if (sp.is_dense(orbit(a, s))) p.pt_witness = s;
  }
  p.PT = p.pt_witness.has_value();
  for (Index s = 0; s < n && !p.wpt_witness; ++s) {
    if (smallest_closed_invariant(a, s).all()) p.wpt_witness = s;
  }
  p.WPT = p.wpt_witness.has_value();

  const auto inv = invariant_sets(a, max_orbits);
  std::vector<const Subset*> open_inv;
  for (const auto& m : inv) {
    if (m.any() && sp.is_open(m)) open_inv.push_back(&m);
  }
  p.TT1 = true;
  for (std::size_t i = 0; i < open_inv.size() && p.TT1; ++i) {
    for (std::size_t j = i + 1; j < open_inv.size(); ++j) {
      if (!open_inv[i]->intersects(*open_inv[j])) {
        p.TT1 = false;
        p.witnesses["TT1"] = to_string(*open_inv[i]) + " and " + to_string(*open_inv[j]);
        break;
      }
    }
  }
  p.TT2 = true;
  for (const Subset* m : open_inv) {
    if (!sp.is_dense(*m)) {
      p.TT2 = false;
      p.witnesses["TT2"] = to_string(*m);
      break;
    }
  }
  p.TT3 = true;
  for (const auto& m : inv) {
    if (!sp.is_dense(m) && !sp.is_nowhere_dense(m)) {
      p.TT3 = false;
      p.witnesses["TT3"] = to_string(m);
      break;
    }
  }
  // Every non-void open set contains a minimal neighbourhood, and recurrence
  // sets are monotone, so minimal neighbourhoods suffice.
  p.RT = true;
  for (Index s = 0; s < n && p.RT; ++s) {
    for (Index t = 0; t < n; ++t) {
      if (recurrence_set(a, sp.neighborhood(s), sp.neighborhood(t)).none()) {
        p.RT = false;
        p.witnesses["RT"] = "U=" + to_string(sp.neighborhood(s)) + " V=" + to_string(sp.neighborhood(t));
        break;
      }
    }
  }
  return p;
}

CheckReport audit_implications(const Action& a, const DynProfile& p) {
  CheckReport rep;
  auto imp = [&](const char* name, bool lhs, bool rhs) { rep.require_if(name, lhs, rhs); };
  imp("T=>PT", p.T, p.PT);
  imp("PT=>RT", p.PT, p.RT);
  imp("TT3=>RT", p.TT3, p.RT);
  imp("RT=>TT2", p.RT, p.TT2);
  imp("TT2=>TT1", p.TT2, p.TT1);
  imp("WPT=>TT1", p.WPT, p.TT1);
  imp("PT=>WPT", p.PT, p.WPT);
  imp("T=>minimal", p.T && a.size() > 0, p.minimal);
  imp("minimal=>PT", p.minimal && a.size() > 0, p.PT);
  const bool open = is_open_groupoid(a.gpd());
  rep.hypothesis("d_open", open);
  const bool all_eq = p.TT1 == p.TT2 && p.TT2 == p.TT3 && p.TT3 == p.RT;
  rep.require_if("open=>TT1<=>TT2<=>TT3<=>RT", open, all_eq, [&] {
    return std::string("TT1=") + (p.TT1 ? "1" : "0") + " TT2=" + (p.TT2 ? "1" : "0") +
           " TT3=" + (p.TT3 ? "1" : "0") + " RT=" + (p.RT ? "1" : "0");
  });
  return rep;
}

CheckReport audit_implications(const Action& a) { return audit_implications(a, classify(a)); }

Subset limit_set(const Action& a, Index s, const Bornology& arrows) {
  const Groupoid& g = a.gpd();
  if (arrows.carrier_size() != g.size()) throw Error("limit_set: bornology carrier mismatch");
  // closure((Xi_x \ k) . s) shrinks as k grows; the bounded subsets of the
  // fibre have the largest member bound() cap Xi_x.
  const Subset fibre = source_fiber(g, a.anchor(s));
  const Subset k = fibre & arrows.bound();
  return a.space().closure(act_set(a, fibre - k, singleton(a.size(), s)));
}

Subset limit_set_via_recurrence(const Action& a, Index s, const Bornology& arrows) {
  const Groupoid& g = a.gpd();
  if (arrows.carrier_size() != g.size()) throw Error("limit_set: bornology carrier mismatch");
  const auto& sp = a.space();
  const Subset S = singleton(a.size(), s);
  Subset out(a.size());
  for (Index t = 0; t < a.size(); ++t) {
    // The minimal neighbourhood gives the smallest recurrence set.
    if (!arrows.is_relatively_compact(g.arrows(), recurrence_set(a, S, sp.neighborhood(t)))) {
      out.set(t);
    }
  }
  return out;
}

Subset fixed_points(const Action& a) {
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    bool fixed = true;
    for (Index xi = 0; xi < a.gpd().size() && fixed; ++xi) {
      if (a.admissible(xi, s) && a.act(xi, s) != s) fixed = false;
    }
    if (fixed) out.set(s);
  }
  return out;
}

Subset fixed_points_via_recurrence(const Action& a) {
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    const Subset S = singleton(a.size(), s);
    if (recurrence_set(a, S, S) == source_fiber(a.gpd(), a.anchor(s))) out.set(s);
  }
  return out;
}

Subset recurrent_points(const Action& a, const Bornology& arrows) {
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    if (limit_set(a, s, arrows).test(s)) out.set(s);
  }
  return out;
}

Subset wandering_points(const Action& a, const Bornology& arrows) {
  const auto& sp = a.space();
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    const Subset& W = sp.neighborhood(s);
    if (arrows.is_relatively_compact(a.gpd().arrows(), recurrence_set(a, W, W))) out.set(s);
  }
  return out;
}

bool is_syndetic(const Groupoid& g, Index x, const Subset& A, const Bornology& arrows) {
  const Subset fibre = source_fiber(g, x);
  if (!A.is_subset_of(fibre)) throw Error("is_syndetic: A is not inside the d-fibre");
  // K A grows with K; the largest bounded set is bound().
  return fibre.is_subset_of(product_set(g, arrows.bound(), A));
}

Subset periodic_points(const Action& a, const Bornology& arrows) {
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    const Subset S = singleton(a.size(), s);
    if (is_syndetic(a.gpd(), a.anchor(s), recurrence_set(a, S, S), arrows)) out.set(s);
  }
  return out;
}

Subset weakly_periodic_points(const Action& a, const Bornology& arrows) {
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    const Subset S = singleton(a.size(), s);
    if (!arrows.is_bounded(recurrence_set(a, S, S))) out.set(s);
  }
  return out;
}

Subset almost_periodic_points(const Action& a, const Bornology& arrows) {
  const auto& sp = a.space();
  Subset out(a.size());
  for (Index s = 0; s < a.size(); ++s) {
    const Subset rec = recurrence_set(a, singleton(a.size(), s), sp.neighborhood(s));
    if (is_syndetic(a.gpd(), a.anchor(s), rec, arrows)) out.set(s);
  }
  return out;
}

PointClasses point_classes(const Action& a, const Bornology& arrows) {
  PointClasses pc;
  pc.bornology = arrows;
  pc.fixed = fixed_points(a);
  pc.recurrent = recurrent_points(a, arrows);
  pc.wandering = wandering_points(a, arrows);
  pc.nonwandering = ~pc.wandering;
  pc.periodic = periodic_points(a, arrows);
  pc.weakly_periodic = weakly_periodic_points(a, arrows);
  pc.almost_periodic = almost_periodic_points(a, arrows);
  for (Index s = 0; s < a.size(); ++s) pc.limit_sets.push_back(limit_set(a, s, arrows));
  return pc;
}

bool is_minimal_set(const Action& a, const Subset& M) {
  const auto& sp = a.space();
  if (M.none() || !sp.is_closed(M) || !is_invariant(a, M)) return false;
  // Every orbit in M must be dense in M.
  bool ok = true;
  for_each_member(M, [&](Index s) {
    if (ok && !M.is_subset_of(sp.closure(orbit(a, s)))) ok = false;
  });
  return ok;
}

CheckReport flacara_check(const Action& a, const Bornology& arrows,
                          const std::optional<Bornology>& space) {
  const Bornology sb = space ? *space : Bornology::all_subsets(a.size());
  CheckReport rep(arrows.is_all() && sb.is_all() ? Mode::faithful : Mode::model_level);
  const auto& sp = a.space();
  const bool open = is_open_groupoid(a.gpd());
  // Finite spaces are locally compact and second countable; the Hausdorff
  // part of local compactness is the discrete topology.
  const bool hausdorff = sp.is_t1();
  rep.hypothesis("d_open", open);
  rep.hypothesis("sigma_hausdorff", hausdorff);
  const Subset per = periodic_points(a, arrows);
  const Subset alper = almost_periodic_points(a, arrows);
  for (Index s = 0; s < a.size(); ++s) {
    const std::string at = "sigma=" + sp.label(s);
    const bool bounded_orbit = sb.is_bounded(orbit(a, s));
    rep.require_if("(i) periodic=>compact_orbit", per.test(s), bounded_orbit, [&] { return at; });
    rep.require_if("(i) open: compact_orbit=>periodic", open && bounded_orbit, per.test(s),
                   [&] { return at; });
    const Subset cl = orbit_closure(a, s);
    const bool min_cpt = is_minimal_set(a, cl) && sb.is_bounded(cl);
    rep.require_if("(ii) almost_periodic=>minimal_compact_closure", hausdorff && alper.test(s),
                   min_cpt, [&] { return at; });
    rep.require_if("(ii) open: minimal_compact_closure=>almost_periodic",
                   hausdorff && open && min_cpt, alper.test(s), [&] { return at; });
  }
  return rep;
}

}  // namespace gd
