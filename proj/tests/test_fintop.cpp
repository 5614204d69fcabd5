#include "util.hpp"

using namespace gdt;

TEST_CASE("discrete and indiscrete open families") {
  CHECK(FiniteSpace::discrete(4).opens().size() == 16);
  CHECK(FiniteSpace::indiscrete(4).opens().size() == 2);
  CHECK(FiniteSpace::discrete(3).is_discrete());
  CHECK_FALSE(FiniteSpace::indiscrete(2).is_discrete());
}

TEST_CASE("sierpinski space") {
  // opens: {}, {0}, {0,1}
  const auto X = FiniteSpace::from_opens(2, {make_subset(2, {0})});
  CHECK(X.is_open(make_subset(2, {0})));
  CHECK_FALSE(X.is_open(make_subset(2, {1})));
  CHECK(X.closure(make_subset(2, {0})) == full_set(2));
  CHECK(X.closure(make_subset(2, {1})) == make_subset(2, {1}));
  CHECK(X.is_dense(make_subset(2, {0})));
  CHECK(X.is_nowhere_dense(make_subset(2, {1})));
}

TEST_CASE("validate_space names the failing pair") {
  const Subset a = make_subset(3, {0}), b = make_subset(3, {1});
  const Report r = validate_space(3, {empty_set(3), full_set(3), a, b});
  REQUIRE(r);
  CHECK(r->clause == "union");
  CHECK_FALSE(validate_space(3, {empty_set(3), full_set(3), a, b, a | b}));
}

TEST_CASE("closure, interior and openness agree with the open family") {
  for (std::size_t k = 0; k < 60; ++k) {
    Rng rng = rng_for(k);
    const std::size_t n = 1 + k % 6;
    std::vector<Subset> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_subset(rng, n));
    const auto X = FiniteSpace::generated(n, gens);
    const auto opens = X.opens();
    for (const Subset& g : gens) CHECK(X.is_open(g));
    for (int t = 0; t < 8; ++t) {
      const Subset S = random_subset(rng, n);
      CHECK(X.closure(S) == closure_oracle(X, S));
      // interior: union of opens inside S
      Subset in(n);
      for (const Subset& U : opens)
        if (U.is_subset_of(S)) in |= U;
      CHECK(X.interior(S) == in);
      CHECK(X.is_open(S) == (std::find(opens.begin(), opens.end(), S) != opens.end()));
      CHECK(X.is_closed(S) == X.is_open(~S));
    }
  }
}

TEST_CASE("basis regenerates the topology") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(100 + k);
    const std::size_t n = 2 + k % 5;
    const auto X = FiniteSpace::generated(n, {random_subset(rng, n), random_subset(rng, n)});
    const auto Y = FiniteSpace::generated(n, X.basis());
    CHECK(X.neighborhoods() == Y.neighborhoods());
  }
}

TEST_CASE("continuity against preimages of opens") {
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng = rng_for(200 + k);
    const std::size_t n = 2 + k % 4, m = 1 + k % 3;
    const auto X = FiniteSpace::generated(n, {random_subset(rng, n)});
    const auto Y = FiniteSpace::generated(m, {random_subset(rng, m)});
    Table f(n);
    for (auto& v : f) v = std::uniform_int_distribution<Index>(0, m - 1)(rng);
    CHECK(is_continuous(X, Y, f) == continuous_oracle(X, Y, f));
  }
  // identity is a homeomorphism, a constant map into a discrete space is not open
  const auto S = FiniteSpace::from_opens(2, {make_subset(2, {0})});
  CHECK(is_homeomorphism(S, S, identity_table(2)));
  CHECK_FALSE(is_continuous(S, FiniteSpace::discrete(2), identity_table(2)));
}

TEST_CASE("product topology") {
  const auto S = FiniteSpace::from_opens(2, {make_subset(2, {0})});
  const auto P = product_space(S, S);
  CHECK(P.size() == 4);
  // U x V open for opens U, V
  for (const Subset& U : S.opens())
    for (const Subset& V : S.opens()) {
      Subset uv(4);
      for_each_member(U, [&](Index i) { for_each_member(V, [&](Index j) { uv.set(i * 2 + j); }); });
      CHECK(P.is_open(uv));
    }
  CHECK(P.opens().size() == 6);
}

TEST_CASE("bornologies are P(T) for a closed T") {
  const auto S = FiniteSpace::from_opens(2, {make_subset(2, {0})});
  const auto b = Bornology::restricted(S, make_subset(2, {0}));
  CHECK(b.bound() == full_set(2));  // closure of the open point
  const auto c = Bornology::restricted(S, make_subset(2, {1}));
  CHECK(c.bound() == make_subset(2, {1}));
  CHECK(c.is_bounded(make_subset(2, {1})));
  CHECK_FALSE(c.is_bounded(make_subset(2, {0})));
  CHECK_THROWS_AS(Bornology::from_bound(S, make_subset(2, {0})), Error);
  CHECK(Bornology::all_subsets(3).is_all());
  CHECK_FALSE(c.validate(S));
}

TEST_CASE("subspace topology") {
  const auto X = FiniteSpace::from_opens(3, {make_subset(3, {0}), make_subset(3, {0, 1})});
  const auto Y = X.subspace(make_subset(3, {1, 2}));
  CHECK(Y.size() == 2);
  CHECK(Y.is_open(make_subset(2, {0})));
  CHECK_FALSE(Y.is_open(make_subset(2, {1})));
}
