#include "util.hpp"

#include "gd/iso.hpp"
#include "gd/vague.hpp"

using namespace gdt;

namespace {

GroupoidPtr ptr(Groupoid g) { return std::make_shared<const Groupoid>(std::move(g)); }

/// Same groupoid with arrow ids permuted by p (old id -> new id).
Groupoid relabel(const Groupoid& g, const Table& p) {
  const std::size_t n = g.size();
  Table inv(n);
  for (Index i = 0; i < n; ++i) inv[p[i]] = i;
  std::vector<Subset> nb(n, Subset(n));
  std::vector<std::string> labels(n);
  Subset units(n);
  Table src(n), rng(n), iv(n), mul(n * n, kNone);
  for (Index i = 0; i < n; ++i) {
    for_each_member(g.arrows().neighborhood(i), [&](Index j) { nb[p[i]].set(p[j]); });
    labels[p[i]] = g.label(i);
    if (g.is_unit(i)) units.set(p[i]);
    src[p[i]] = p[g.d(i)];
    rng[p[i]] = p[g.r(i)];
    iv[p[i]] = p[g.inv(i)];
    for (Index j = 0; j < n; ++j)
      if (g.composable(i, j)) mul[p[i] * n + p[j]] = p[g.mul(i, j)];
  }
  return Groupoid(FiniteSpace::from_neighborhoods(nb, labels), units, src, rng, iv, mul);
}

}  // namespace

TEST_CASE("relabelled pair groupoid is isomorphic") {
  const Groupoid g = pair_groupoid(2);
  const Groupoid h = relabel(g, {3, 1, 0, 2});
  REQUIRE_FALSE(validate_groupoid(h));
  const auto iso = find_isomorphism(g, h);
  REQUIRE(iso);
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b)
      if (g.composable(a, b)) CHECK(h.mul((*iso)[a], (*iso)[b]) == (*iso)[g.mul(a, b)]);
}

TEST_CASE("group pulled back over a discrete set is group x pair") {
  // pi constant onto the only unit
  const GroupoidPtr c2 = ptr(cyclic_group(2));
  const Table pi = {0, 0};
  const FiniteSpace D = FiniteSpace::discrete(2);
  const PullbackGroupoid pb = build_pullback(c2, D, pi);
  CHECK(are_isomorphic(*pb.realized, product_groupoid(*c2, gd::pair_groupoid(D))));
  const FiniteSpace I = FiniteSpace::indiscrete(2);
  const PullbackGroupoid pbi = build_pullback(c2, I, pi);
  CHECK(are_isomorphic(*pbi.realized, product_groupoid(*c2, gd::pair_groupoid(I))));
}

TEST_CASE("C2 and the trivial groupoid on two points differ") {
  const Groupoid c2 = cyclic_group(2);
  const Groupoid triv = trivial_groupoid(FiniteSpace::discrete(2));
  CHECK(c2.size() == triv.size());
  CHECK_FALSE(are_isomorphic(c2, triv));
}

TEST_CASE("topology matters") {
  const Groupoid d = trivial_groupoid(FiniteSpace::discrete(2));
  const Groupoid s = trivial_groupoid(FiniteSpace::from_opens(2, {make_subset(2, {0})}));
  CHECK_FALSE(are_isomorphic(d, s));
  CHECK(are_isomorphic(s, s));
}

TEST_CASE("random relabellings are found") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(24000 + k);
    GenOptions o = small_opts(topo_of(k));
    o.max_arrows = kIsoArrowCap;
    const GroupoidPtr g = gen_groupoid(rng, o);
    Table p = identity_table(g->size());
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(are_isomorphic(*g, relabel(*g, p)));
  }
}

TEST_CASE("size cap") {
  const Groupoid big = pair_groupoid(4);
  CHECK_THROWS_AS(find_isomorphism(big, big), Error);
}
