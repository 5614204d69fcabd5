#include "util.hpp"

using namespace gdt;

TEST_CASE("pair groupoid") {
  const Groupoid g = pair_groupoid(3);
  CHECK_FALSE(validate_groupoid(g));
  CHECK(g.size() == 9);
  CHECK(g.unit_count() == 3);
  CHECK(is_transitive_groupoid(g));
  const Recognition r = recognize(g);
  CHECK(r.is_pair_groupoid);
  CHECK_FALSE(r.is_group);
  // (0,1)(1,2) = (0,2)
  CHECK(g.mul(0 * 3 + 1, 1 * 3 + 2) == 0 * 3 + 2);
  CHECK(g.mul(0 * 3 + 1, 0 * 3 + 2) == kNone);
}

TEST_CASE("cyclic group and bundles") {
  const Groupoid c4 = cyclic_group(4);
  CHECK_FALSE(validate_groupoid(c4));
  CHECK(recognize(c4).is_group);
  CHECK(isotropy(c4, 0).count() == 4);
  const Groupoid bundle = disjoint_union(c4, cyclic_group(2));
  CHECK_FALSE(validate_groupoid(bundle));
  CHECK(recognize(bundle).is_group_bundle);
  CHECK_FALSE(is_transitive_groupoid(bundle));
  CHECK(bundle.unit_count() == 2);
}

TEST_CASE("validator catches a broken inverse") {
  const Groupoid c3 = cyclic_group(3);
  Table inv = c3.inv_table();
  std::swap(inv[1], inv[2]);
  inv[1] = 1;
  const Groupoid bad(c3.arrows(), c3.units(), c3.src(), c3.rng(), inv, c3.mul_table());
  const Report r = validate_groupoid(bad);
  REQUIRE(r);
  CHECK(r->clause.find("inv") != std::string::npos);
}

TEST_CASE("validator catches a discontinuous multiplication") {
  // C2 with {e} open: mul^-1(e) = {(e,e), (g,g)} is not open in the product
  const Groupoid c2 = cyclic_group(2);
  const Groupoid t = c2.with_topology(FiniteSpace::from_opens(2, {make_subset(2, {0})}));
  CHECK(validate_groupoid(t));
}

TEST_CASE("fibers, isotropy and product sets against brute force") {
  for (std::size_t k = 0; k < 60; ++k) {
    Rng rng = rng_for(300 + k);
    const GroupoidPtr g = gen_groupoid(rng, small_opts(topo_of(k)));
    REQUIRE_FALSE(validate_groupoid(*g));
    const std::size_t n = g->size();
    Subset M = random_subset(rng, n) & g->units(), N = random_subset(rng, n) & g->units();
    const Fibers f = fibers(*g, M, N);
    Subset src(n), rng_(n);
    for (Index a = 0; a < n; ++a) {
      if (M.test(g->d(a))) src.set(a);
      if (N.test(g->r(a))) rng_.set(a);
    }
    CHECK(f.source == src);
    CHECK(f.range == rng_);
    CHECK(f.both == (src & rng_));

    const Subset A = random_subset(rng, n), B = random_subset(rng, n);
    Subset AB(n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (A.test(a) && B.test(b) && g->d(a) == g->r(b)) AB.set(g->mul(a, b));
    CHECK(product_set(*g, A, B) == AB);

    for (Index x : g->unit_list()) {
      Subset iso(n);
      for (Index a = 0; a < n; ++a)
        if (g->d(a) == x && g->r(a) == x) iso.set(a);
      CHECK(isotropy(*g, x) == iso);
    }
  }
}

TEST_CASE("groupoid axioms hold on generated groupoids") {
  for (std::size_t k = 0; k < 60; ++k) {
    Rng rng = rng_for(400 + k);
    const GroupoidPtr g = gen_groupoid(rng, small_opts(topo_of(k)));
    const std::size_t n = g->size();
    for (Index a = 0; a < n; ++a) {
      CHECK(g->mul(a, g->inv(a)) == g->r(a));
      CHECK(g->mul(g->inv(a), a) == g->d(a));
      CHECK(g->mul(g->r(a), a) == a);
      for (Index b = 0; b < n; ++b) {
        if (!g->composable(a, b)) continue;
        const Index ab = g->mul(a, b);
        for (Index c = 0; c < n; ++c)
          if (g->composable(b, c)) CHECK(g->mul(ab, c) == g->mul(a, g->mul(b, c)));
      }
    }
  }
}

TEST_CASE("wide subgroupoid check") {
  const Groupoid g = pair_groupoid(2);
  CHECK(subgroupoid_check(g, g.units()).is_wide);
  CHECK(subgroupoid_check(g, full_set(4)).is_subgroupoid);
  CHECK_FALSE(subgroupoid_check(g, make_subset(4, {0, 1})).is_subgroupoid);  // (0,1) without inverse
}

TEST_CASE("functor validation") {
  const Groupoid c4 = cyclic_group(4), c2 = cyclic_group(2);
  const Table mod2 = {0, 1, 0, 1};
  CHECK_FALSE(validate_functor(c4, c2, mod2));
  const Table bad = {0, 1, 1, 1};
  CHECK(validate_functor(c4, c2, bad));
}

TEST_CASE("discrete groupoids are open") {
  for (std::size_t k = 0; k < 20; ++k) {
    Rng rng = rng_for(500 + k);
    CHECK(is_open_groupoid(*gen_groupoid(rng, small_opts(Topo::discrete))));
  }
}
