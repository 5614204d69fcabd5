#include "util.hpp"

#include "gd/dynamics.hpp"

using namespace gdt;

namespace {

bool rc(const Action& a, const Bornology& b, const Subset& S) {
  return b.is_relatively_compact(a.gpd().arrows(), S);
}

/// Syndetic: some bounded K with K A covering the fibre, K enumerated.
bool syndetic_oracle(const Groupoid& g, Index x, const Subset& A, const Bornology& b) {
  const Subset fibre = source_fiber(g, x);
  const auto ids = members(b.bound());
  for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
    Subset K(g.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask >> i & 1) K.set(ids[i]);
    Subset KA(g.size());
    for_each_member(K, [&](Index k) {
      for_each_member(A, [&](Index a) {
        if (g.composable(k, a)) KA.set(g.mul(k, a));
      });
    });
    if (fibre.is_subset_of(KA)) return true;
  }
  return false;
}

Bornology some_bornology(const Action& a, std::size_t k) {
  const FiniteSpace& X = a.gpd().arrows();
  if (k % 2 == 0) return Bornology::all_subsets(X.size());
  Subset core(X.size());
  core.set(k % X.size());
  return Bornology::restricted(X, core);
}

bool small_enough(const Action& a, const Bornology& b) { return b.bound().count() <= 12 && a.size() <= 6; }

}  // namespace

TEST_CASE("limit sets against the definition") {
  for_actions(80, 7000, [](const Action& a, std::size_t k) {
    const Bornology b = some_bornology(a, k);
    if (!small_enough(a, b)) return;
    const auto opens = a.space().opens();
    for (Index s = 0; s < a.size(); ++s) {
      const Subset fibre = source_fiber(a.gpd(), a.anchor(s));
      const auto ks = members(fibre & b.bound());
      Subset L = full_set(a.size());
      for (std::size_t mask = 0; mask < (std::size_t{1} << ks.size()); ++mask) {
        Subset rest = fibre;
        for (std::size_t i = 0; i < ks.size(); ++i)
          if (mask >> i & 1) rest.reset(ks[i]);
        Subset moved(a.size());
        for_each_member(rest, [&](Index xi) { moved.set(a.act(xi, s)); });
        L &= a.space().closure(moved);
      }
      CHECK(limit_set(a, s, b) == L);

      Subset viaR(a.size());
      for (Index t = 0; t < a.size(); ++t) {
        bool all = true;
        for (const Subset& V : opens)
          if (V.test(t) && rc(a, b, recurrence_oracle(a, singleton(a.size(), s), V))) all = false;
        if (all) viaR.set(t);
      }
      CHECK(limit_set_via_recurrence(a, s, b) == viaR);
      CHECK(viaR == L);
    }
  });
}

TEST_CASE("point classes against the definitions") {
  for_actions(80, 8000, [](const Action& a, std::size_t k) {
    const Bornology b = some_bornology(a, k);
    if (!small_enough(a, b)) return;
    const auto opens = a.space().opens();
    const PointClasses pc = point_classes(a, b);
    for (Index s = 0; s < a.size(); ++s) {
      const Subset S = singleton(a.size(), s);
      bool fixed = true;
      for (Index xi = 0; xi < a.gpd().size(); ++xi)
        if (a.admissible(xi, s) && a.act(xi, s) != s) fixed = false;
      CHECK(pc.fixed.test(s) == fixed);

      bool wandering = false, almost = true;
      for (const Subset& W : opens) {
        if (!W.test(s)) continue;
        if (rc(a, b, recurrence_oracle(a, W, W))) wandering = true;
        if (!syndetic_oracle(a.gpd(), a.anchor(s), recurrence_oracle(a, S, W), b)) almost = false;
      }
      CHECK(pc.wandering.test(s) == wandering);
      CHECK(pc.almost_periodic.test(s) == almost);
      CHECK(pc.periodic.test(s) == syndetic_oracle(a.gpd(), a.anchor(s), recurrence_oracle(a, S, S), b));
      CHECK(pc.weakly_periodic.test(s) == !b.is_bounded(recurrence_oracle(a, S, S)));
      CHECK(pc.recurrent.test(s) == pc.limit_sets[s].test(s));
    }
    CHECK(fixed_points_via_recurrence(a) == pc.fixed);
  });
}

TEST_CASE("all subsets: degenerate baseline") {
  for_actions(80, 9000, [](const Action& a, std::size_t) {
    const PointClasses pc = point_classes(a, Bornology::all_subsets(a.gpd().size()));
    CHECK(pc.wandering.all());
    CHECK(pc.periodic.all());
    CHECK(pc.almost_periodic.all());
    CHECK(pc.weakly_periodic.none());
    CHECK(pc.recurrent.none());
    for (const Subset& L : pc.limit_sets) CHECK(L.none());
  });
}

TEST_CASE("classification flags") {
  for_actions(80, 10000, [](const Action& a, std::size_t) {
    const DynProfile p = classify(a);
    const auto& X = a.space();
    bool pt = false, minimal = true;
    for (Index s = 0; s < a.size(); ++s) {
      const bool dense = X.closure(orbit_oracle(a, s)).all();
      pt = pt || dense;
      minimal = minimal && dense;
    }
    CHECK(p.PT == pt);
    CHECK(p.minimal == minimal);
    CHECK(p.T == (a.size() > 0 && orbit_oracle(a, 0).all()));
    if (p.pt_witness) CHECK(X.closure(orbit_oracle(a, *p.pt_witness)).all());
  });
}

TEST_CASE("implication chain on generated actions") {
  for_actions(150, 11000, [](const Action& a, std::size_t) {
    const CheckReport r = audit_implications(a);
    CHECK_FALSE(r.any_violated());
  });
}

TEST_CASE("minimal sets") {
  for_actions(60, 12000, [](const Action& a, std::size_t) {
    for (const Subset& S : invariant_oracle(a)) {
      if (S.none() || !a.space().is_closed(S)) continue;
      // oracle: no proper non-empty closed invariant subset
      bool minimal = true;
      for (const Subset& T : invariant_oracle(a))
        if (T.any() && T != S && T.is_subset_of(S) && a.space().is_closed(T)) minimal = false;
      CHECK(is_minimal_set(a, S) == minimal);
    }
  });
}

TEST_CASE("flacara on generated actions") {
  for_actions(60, 13000, [](const Action& a, std::size_t k) {
    const CheckReport r = flacara_check(a, Bornology::all_subsets(a.gpd().size()));
    CHECK(r.mode() == Mode::faithful);
    CHECK_FALSE(r.any_violated());
    // restricted bornologies are only a model of compactness
    const Bornology b = some_bornology(a, 2 * k + 1);
    CHECK(flacara_check(a, b).mode() == (b.is_all() ? Mode::faithful : Mode::model_level));
  });
}
