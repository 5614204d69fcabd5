#include "util.hpp"

#include "gd/serialize.hpp"

using namespace gdt;

TEST_CASE("small groups satisfy the group axioms") {
  for (const SmallGroup& G : small_groups()) {
    const std::size_t n = G.order();
    for (Index a = 0; a < n; ++a) {
      CHECK(G.mul[0][a] == a);
      CHECK(G.mul[a][G.inv(a)] == 0);
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) CHECK(G.mul[G.mul[a][b]][c] == G.mul[a][G.mul[b][c]]);
    }
  }
  CHECK(small_groups().size() == 8);
}

TEST_CASE("homomorphism counts") {
  // |Hom(G, C2)| = number of index <= 2 subgroups, counted by hand
  const Index C2 = group_index("C2"), C3 = group_index("C3"), C4 = group_index("C4");
  const Index V4 = group_index("V4"), S3 = group_index("S3"), C6 = group_index("C6");
  CHECK(homomorphisms(C2, C2).size() == 2);
  CHECK(homomorphisms(C3, C2).size() == 1);
  CHECK(homomorphisms(C4, C2).size() == 2);
  CHECK(homomorphisms(V4, C2).size() == 4);
  CHECK(homomorphisms(S3, C2).size() == 2);
  CHECK(homomorphisms(C6, C3).size() == 3);
  CHECK(homomorphisms(C2, S3).size() == 4);
  for (const Table& h : homomorphisms(S3, C2)) {
    const auto& G = small_groups()[S3];
    const auto& H = small_groups()[C2];
    for (Index a = 0; a < 6; ++a)
      for (Index b = 0; b < 6; ++b) CHECK(h[G.mul[a][b]] == H.mul[h[a]][h[b]]);
  }
}

TEST_CASE("subgroup lattices") {
  CHECK(subgroups(group_index("C1")).size() == 1);
  CHECK(subgroups(group_index("C4")).size() == 3);
  CHECK(subgroups(group_index("V4")).size() == 5);
  CHECK(subgroups(group_index("S3")).size() == 6);
  CHECK(subgroups(group_index("C6")).size() == 4);
}

TEST_CASE("preorder closure makes maps monotone") {
  PreorderClosure pc;
  const int a = pc.add_carrier(3), b = pc.add_carrier(2);
  pc.add_unary(a, b, {0, 0, 1});
  pc.relate(b, 0, 1);
  pc.relate(a, 0, 2);
  pc.close();
  const FiniteSpace A = pc.space(a, {"x", "y", "z"}), B = pc.space(b, {"p", "q"});
  CHECK(is_continuous(A, B, Table{0, 0, 1}));
  CHECK(A.leq(0, 2));
}

TEST_CASE("generators are deterministic and valid") {
  const std::vector<std::string> kinds = {"trivial", "pair", "group", "group_bundle", "transformation",
                                          "pullback_of", "random_topologized", "groupoid", "action",
                                          "morphism", "gvm_action", "actor", "actor_action"};
  for (const std::string& kind : kinds) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.seed = seed;
      spec.topo = static_cast<Topo>(seed % 3);
      const Instance a = generate(spec), b = generate(spec);
      CAPTURE(kind);
      CAPTURE(seed);
      CHECK(to_json(a) == to_json(b));
      CHECK_FALSE(validate_instance(a));
    }
  }
}

TEST_CASE("generator steering delivers its hypotheses") {
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng = rng_for(21000 + k);
    GenOptions o = small_opts(topo_of(k));
    o.steer = Steer::equality;
    const ActorOfActions pa = gen_actor_action(rng, o);
    CHECK(saturates(pa));
    CHECK(is_injective(pa.g));

    Rng rng2 = rng_for(22000 + k);
    o.steer = Steer::open_nondiscrete;
    const ActionPtr a = gen_action(rng2, o);
    CHECK(is_open_groupoid(a->gpd()));

    Rng rng3 = rng_for(23000 + k);
    o.steer = Steer::surjective;
    const GVMOfActions va = gen_gvm_action(rng3, o);
    CHECK(is_surjective(va.h, va.target->size()));
  }
}

TEST_CASE("generator rejects unknown kinds") {
  GeneratorSpec spec;
  spec.kind = "nope";
  CHECK_THROWS_AS(generate(spec), Error);
}
