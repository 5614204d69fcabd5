#include "util.hpp"

using namespace gdt;

namespace {

GroupoidPtr ptr(Groupoid g) { return std::make_shared<const Groupoid>(std::move(g)); }

}  // namespace

TEST_CASE("canonical action of a pair groupoid") {
  const GroupoidPtr g = ptr(pair_groupoid(3));
  const Action a = canonical_action(g);
  CHECK_FALSE(validate_action(a));
  CHECK(a.size() == 3);
  CHECK(orbits(a).size() == 1);
  // (x,y) . y = x
  CHECK(a.act(0 * 3 + 2, 2) == 0);
}

TEST_CASE("self action orbits are range fibres") {
  const GroupoidPtr g = ptr(pair_groupoid(2));
  const Action a = self_action(g);
  CHECK_FALSE(validate_action(a));
  // xi . eta = xi eta, the orbit of eta is d-fibre of eta, indexed by range
  for (Index eta = 0; eta < 4; ++eta) CHECK(orbit(a, eta).count() == 2);
}

TEST_CASE("validator rejects a non-equivariant table") {
  const GroupoidPtr c2 = ptr(cyclic_group(2));
  // g sends both points to 1, so g.(g.0) = 1 but (gg).0 = 0
  const Action bad = Action::from_triples(c2, FiniteSpace::discrete(2), {0, 0},
                                          {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  CHECK(validate_action(bad));
}

TEST_CASE("recurrence sets against the definition") {
  for_actions(80, 1000, [](const Action& a, std::size_t k) {
    REQUIRE_FALSE(validate_action(a));
    Rng rng = rng_for(k);
    for (int t = 0; t < 6; ++t) {
      const Subset M = random_subset(rng, a.size()), N = random_subset(rng, a.size());
      CHECK(recurrence_set(a, M, N) == recurrence_oracle(a, M, N));
    }
  });
}

TEST_CASE("orbits, saturation and invariance against brute force") {
  for_actions(80, 2000, [](const Action& a, std::size_t k) {
    Rng rng = rng_for(k);
    for (Index s = 0; s < a.size(); ++s) CHECK(orbit(a, s) == orbit_oracle(a, s));
    const Subset M = random_subset(rng, a.size());
    Subset sat(a.size());
    for_each_member(M, [&](Index s) { sat |= orbit_oracle(a, s); });
    CHECK(saturate(a, M) == sat);
    CHECK(is_invariant(a, sat));
    CHECK(is_invariant(a, M) == (M == sat));
  });
}

TEST_CASE("smallest closed invariant set") {
  for_actions(60, 3000, [](const Action& a, std::size_t) {
    const auto inv = invariant_oracle(a);
    for (Index s = 0; s < a.size(); ++s) {
      Subset best = full_set(a.size());
      for (const Subset& S : inv)
        if (S.test(s) && a.space().is_closed(S)) best &= S;
      CHECK(smallest_closed_invariant(a, s) == best);
      CHECK(orbit_closure(a, s) == a.space().closure(orbit_oracle(a, s)));
    }
  });
}

TEST_CASE("group bundle and self action recurrence formulas") {
  const GroupoidPtr b = ptr(disjoint_union(cyclic_group(3), cyclic_group(2)));
  CHECK(recurrence_set_bundle_formula(canonical_action(b)));
  CHECK(recurrence_set_bundle_formula(self_action(b)));
  CHECK(self_action_formula(ptr(pair_groupoid(2))));
  CHECK(self_action_formula(b));
}

TEST_CASE("caofi on generated actions") {
  for_actions(60, 4000, [](const Action& a, std::size_t) { CHECK_FALSE(caofi_check(a).any_violated()); });
}

TEST_CASE("morphisms: identity and composition") {
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng = rng_for(5000 + k);
    const ActionMorphism m = gen_morphism(rng, small_opts(topo_of(k)));
    REQUIRE_FALSE(validate_morphism(m));
    const ActionMorphism left = compose_morphisms(identity_morphism(m.target), m);
    const ActionMorphism right = compose_morphisms(m, identity_morphism(m.source));
    CHECK(left.psi == m.psi);
    CHECK(left.f == m.f);
    CHECK(right.psi == m.psi);
    CHECK(right.f == m.f);
    const ActionMorphism t = terminal_morphism(m.target);
    CHECK_FALSE(validate_morphism(compose_morphisms(t, m)));
  }
}

TEST_CASE("transported recurrence inclusion") {
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng = rng_for(6000 + k);
    const ActionMorphism m = gen_morphism(rng, small_opts(topo_of(k)));
    for (int t = 0; t < 6; ++t) {
      const Subset M = random_subset(rng, m.source->size()), N = random_subset(rng, m.source->size());
      const TransportRecurrence tr = transport_recurrence(m, M, N);
      // oracle: Psi of the source recurrence set, inside the target one of f(M), f(N)
      const Subset lhs = image(m.psi, recurrence_oracle(*m.source, M, N), m.target->gpd().size());
      const Subset rhs = recurrence_oracle(*m.target, image(m.f, M, m.target->size()),
                                           image(m.f, N, m.target->size()));
      CHECK(tr.lhs == lhs);
      CHECK(tr.rhs == rhs);
      CHECK(lhs.is_subset_of(rhs));
    }
  }
}

TEST_CASE("sub action and sum") {
  const GroupoidPtr c2 = ptr(cyclic_group(2));
  const Action swap = Action::from_triples(c2, FiniteSpace::discrete(2), {0, 0},
                                           {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  REQUIRE_FALSE(validate_action(swap));
  const Action sum = action_sum(swap, canonical_action(c2));
  CHECK(sum.size() == 3);
  CHECK(orbits(sum).size() == 2);
  const Action sub = sub_action(sum, make_subset(3, {2}));
  CHECK(sub.size() == 1);
  CHECK_THROWS_AS(sub_action(sum, make_subset(3, {0})), Error);
}
