#include "util.hpp"

#include <set>

#include "gd/iso.hpp"
#include "gd/serialize.hpp"
#include "gd/vague.hpp"
#include "gd/verify.hpp"

using namespace gdt;

namespace {

GroupoidPtr ptr(Groupoid g) { return std::make_shared<const Groupoid>(std::move(g)); }

const GVMOfActions& as_gvm(const Instance& i) { return std::get<GVMOfActions>(i); }

}  // namespace

TEST_CASE("pullback triples against brute force") {
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng = rng_for(14000 + k);
    const GroupoidPtr g = gen_groupoid(rng, small_opts(topo_of(k)));
    // pi: A -> units, surjective, A discrete with one or two copies per unit
    Table pi;
    for (Index x : g->unit_list()) {
      pi.push_back(x);
      if (std::bernoulli_distribution(0.5)(rng)) pi.push_back(x);
    }
    const PullbackGroupoid pb = build_pullback(g, FiniteSpace::discrete(pi.size()), pi);
    CHECK_FALSE(validate_groupoid(*pb.realized));
    std::vector<std::array<Index, 3>> want;
    for (Index a = 0; a < pi.size(); ++a)
      for (Index xi = 0; xi < g->size(); ++xi)
        for (Index b = 0; b < pi.size(); ++b)
          if (pi[a] == g->r(xi) && pi[b] == g->d(xi)) want.push_back({a, xi, b});
    CHECK(pb.triples == want);
    for (Index t = 0; t < pb.triples.size(); ++t) {
      CHECK(pb.find(pb.triples[t][0], pb.triples[t][1], pb.triples[t][2]) == t);
      CHECK(pb.Pi[t] == pb.triples[t][1]);
    }
  }
}

TEST_CASE("pullback over the identity is isomorphic to the original") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(15000 + k);
    GenOptions o = small_opts(topo_of(k));
    o.max_arrows = kIsoArrowCap;
    const GroupoidPtr g = gen_groupoid(rng, o);
    CHECK(are_isomorphic(*g, *pullback_over_identity(g).realized));
  }
}

TEST_CASE("pullback rejects a non-surjective pi") {
  const GroupoidPtr g = ptr(pair_groupoid(2));
  const Table pi = {0, 0};
  CHECK_THROWS_AS(build_pullback(g, FiniteSpace::discrete(2), pi), Error);
}

TEST_CASE("pullback action recurrence identity") {
  for (std::size_t k = 0; k < 40; ++k) {
    const auto va = as_gvm(suite_instance(TheoremId::inzbor, 3, k));
    Rng rng = rng_for(k);
    for (int t = 0; t < 6; ++t) {
      const std::size_t n = va.pa.source->size();
      CHECK(pullback_recurrence_identity(va.pa, random_subset(rng, n), random_subset(rng, n)));
    }
  }
}

TEST_CASE("embedding an ordinary morphism") {
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng = rng_for(16000 + k);
    const ActionMorphism m = gen_morphism(rng, small_opts(topo_of(k)));
    if (!is_injective(m.psi_units())) {
      CHECK_THROWS_AS(embed_ordinary(m), Error);
      continue;
    }
    const GVMOfActions va = embed_ordinary(m);
    CHECK_FALSE(validate_gvm_action(va));
    CHECK(va.h == m.f);
    // the lifted recurrence inclusion holds for every pair tried
    for (int t = 0; t < 6; ++t) {
      const Subset M = random_subset(rng, m.source->size()), N = random_subset(rng, m.source->size());
      CHECK(thm_both_check(va, M, N).inclusion);
    }
  }
}

TEST_CASE("both: Gamma of the pulled-back recurrence set") {
  for (std::size_t k = 0; k < 40; ++k) {
    const auto va = as_gvm(suite_instance(TheoremId::both, 5, k));
    Rng rng = rng_for(k);
    const Action& S = *va.source;
    const Action& T = *va.target;
    for (int t = 0; t < 6; ++t) {
      const Subset M = random_subset(rng, S.size()), N = random_subset(rng, S.size());
      const ThmBoth r = thm_both_check(va, M, N);
      // oracle from the definition
      const Subset R = recurrence_oracle(S, M, N);
      Subset lhs(va.gvm.pb_prime.realized->size());
      for (Index p = 0; p < va.gvm.pb.triples.size(); ++p)
        if (R.test(va.gvm.pb.Pi[p])) lhs.set(va.gvm.Gamma[p]);
      const Subset R2 = recurrence_oracle(T, image(va.h, M, T.size()), image(va.h, N, T.size()));
      Subset rhs(lhs.size());
      for (Index p = 0; p < va.gvm.pb_prime.triples.size(); ++p)
        if (R2.test(va.gvm.pb_prime.Pi[p])) rhs.set(p);
      CHECK(r.lhs == lhs);
      CHECK(r.rhs == rhs);
      CHECK(r.inclusion);
      if (r.eq_hyp) CHECK(r.equality);
    }
  }
}

TEST_CASE("minimal sets of a gvm target") {
  for (std::size_t k = 0; k < 40; ++k) {
    const auto va = as_gvm(suite_instance(TheoremId::garbanzos, 9, k));
    const Action& T = *va.target;
    for (const Subset& M : minimal_sets(T)) CHECK(is_minimal_set(T, M));
    std::size_t count = 0;
    for (const Subset& S : invariant_oracle(T))
      if (is_minimal_set(T, S)) ++count;
    CHECK(minimal_sets(T).size() == count);
  }
}

TEST_CASE("garbanzos counterexample") {
  // trivial group on {p, q} -> C2 swapping {a, b}, h(p) = a, h(q) = b
  const auto va = as_gvm(load_instance(std::string(GD_FIXTURES) + "/counterexample_garbanzos.json"));
  REQUIRE_FALSE(validate_gvm_action(va));
  CHECK(is_surjective(va.h, va.target->size()));
  const auto mins = minimal_sets(*va.source);
  CHECK(mins.size() == 2);
  const auto mins_t = minimal_sets(*va.target);
  REQUIRE(mins_t.size() == 1);
  CHECK(mins_t[0].all());
  for (const Subset& M : mins) CHECK(image(va.h, M, 2) != mins_t[0]);
  // both the minimal-image and the minimal-preimage clauses fail
  const CheckReport r = transport_profile(va);
  std::set<std::string> violated;
  for (const Clause& c : r.clauses())
    if (c.status == Status::violated) violated.insert(c.name);
  CHECK(violated == std::set<std::string>{"secinta(iv) minimal image", "garbanzos minimal preimage"});
}

TEST_CASE("color and rolar on generated gvm actions") {
  for (std::size_t k = 0; k < 40; ++k) {
    const auto va = as_gvm(suite_instance(TheoremId::color, 11, k));
    CHECK_FALSE(thm_color_check(va).any_violated());
    const auto vb = as_gvm(suite_instance(TheoremId::rolar, 11, k));
    const CheckReport r = transport_profile(vb).select([](const std::string& n) { return n.rfind("rolar", 0) == 0; });
    CHECK_FALSE(r.any_violated());
  }
}
