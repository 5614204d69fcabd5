#include "util.hpp"

#include "gd/actor.hpp"
#include "gd/serialize.hpp"
#include "gd/sweep.hpp"
#include "gd/verify.hpp"

using namespace gdt;

namespace {

GroupoidPtr ptr(Groupoid g) { return std::make_shared<const Groupoid>(std::move(g)); }

ActorOfActions actor_action_cell(TheoremId t, std::uint64_t seed, std::size_t k) {
  return std::get<ActorOfActions>(suite_instance(t, seed, k));
}

}  // namespace

TEST_CASE("identity actor is left translation") {
  const GroupoidPtr g = ptr(pair_groupoid(2));
  const Actor id = identity_actor(g);
  CHECK_FALSE(validate_actor(id));
  for (Index xi = 0; xi < g->size(); ++xi)
    for (Index eta = 0; eta < g->size(); ++eta)
      if (id.admissible(xi, eta)) CHECK(id.apply(xi, eta) == g->mul(xi, eta));
  // the identity functor gives the same actor
  CHECK(functor_actor(g, g, identity_table(g->size())) == id);
}

TEST_CASE("functor actor from C4 onto C2") {
  const GroupoidPtr c4 = ptr(cyclic_group(4)), c2 = ptr(cyclic_group(2));
  const Table mod2 = {0, 1, 0, 1};
  const Actor phi = functor_actor(c4, c2, mod2);
  CHECK_FALSE(validate_actor(phi));
  for (Index xi = 0; xi < 4; ++xi)
    for (Index eta = 0; eta < 2; ++eta) CHECK(phi.apply(xi, eta) == c2->mul(mod2[xi], eta));
}

TEST_CASE("actor validation catches a broken diamond") {
  const GroupoidPtr c2 = ptr(cyclic_group(2));
  Actor phi = identity_actor(c2);
  phi.diamond[1 * 2 + 1] = 1;  // g . g = g
  CHECK(validate_actor(phi));
}

TEST_CASE("actor composition: identities and associativity") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(17000 + k);
    const Actor phi = gen_actor(rng, small_opts(topo_of(k)));
    REQUIRE_FALSE(validate_actor(phi));
    CHECK(compose_actors(phi, identity_actor(phi.source)) == phi);
    CHECK(compose_actors(identity_actor(phi.target), phi) == phi);
    const Actor psi = compose_actors(identity_actor(phi.target), compose_actors(phi, identity_actor(phi.source)));
    CHECK(psi == phi);
  }
}

TEST_CASE("mu factors through r on the target") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(18000 + k);
    const Actor phi = gen_actor(rng, small_opts(topo_of(k)));
    for (Index eta = 0; eta < phi.target->size(); ++eta) CHECK(phi.mu[eta] == phi.nu(phi.target->r(eta)));
  }
}

TEST_CASE("actor of actions: validation and composition with identities") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(19000 + k);
    const ActorOfActions pa = gen_actor_action(rng, small_opts(topo_of(k)));
    REQUIRE_FALSE(validate_actor_of_actions(pa));
    const auto left = compose_actor_of_actions(identity_actor_of_actions(pa.target), pa);
    const auto right = compose_actor_of_actions(pa, identity_actor_of_actions(pa.source));
    CHECK(left.g == pa.g);
    CHECK(right.g == pa.g);
    CHECK(left.actor == pa.actor);
    CHECK(right.actor == pa.actor);
  }
}

TEST_CASE("diamond saturation against brute force") {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng = rng_for(20000 + k);
    const Actor phi = gen_actor(rng, small_opts(topo_of(k)));
    const Subset S = random_subset(rng, phi.target->size());
    Subset sat(phi.target->size());
    for_each_member(S, [&](Index eta) {
      for (Index xi = 0; xi < phi.source->size(); ++xi)
        if (phi.admissible(xi, eta)) sat.set(phi.apply(xi, eta));
    });
    CHECK(diamond_saturation(phi, S) == sat);
  }
}

TEST_CASE("liema paired inclusion against brute force") {
  for (std::size_t k = 0; k < 40; ++k) {
    const ActorOfActions pa = actor_action_cell(TheoremId::liema, 21, k);
    const Action& S = *pa.source;
    const Action& T = *pa.target;
    Rng rng = rng_for(k);
    for (int t = 0; t < 6; ++t) {
      const Subset M = random_subset(rng, S.size()), N = random_subset(rng, S.size());
      Subset lhs(T.gpd().size());
      for (Index xi = 0; xi < S.gpd().size(); ++xi)
        for_each_member(M, [&](Index s) {
          if (S.admissible(xi, s) && N.test(S.act(xi, s))) lhs.set(pa.actor.apply(xi, T.anchor(pa.g[s])));
        });
      const Subset rhs = recurrence_oracle(T, image(pa.g, M, T.size()), image(pa.g, N, T.size()));
      const Liema l = liema_check(pa, M, N);
      CHECK(l.lhs == lhs);
      CHECK(l.rhs == rhs);
      CHECK(lhs.is_subset_of(rhs));
    }
  }
}

TEST_CASE("liema set-product reading fails on the fixture") {
  const auto pa = std::get<ActorOfActions>(
      load_instance(std::string(GD_FIXTURES) + "/counterexample_liema_setwise.json"));
  REQUIRE_FALSE(validate_actor_of_actions(pa));
  // nu sends both target units to the single source unit
  CHECK(pa.actor.nu(0) == pa.actor.nu(1));
  const Liema l = liema_check(pa, make_subset(2, {0, 1}), make_subset(2, {0}));
  CHECK(l.inclusion);
  CHECK_FALSE(l.setwise_inclusion);
  CHECK(l.lhs_setwise == make_subset(2, {0, 1}));
  CHECK(l.rhs == make_subset(2, {0}));
}

TEST_CASE("miraj round trips") {
  for (std::size_t k = 0; k < 40; ++k) {
    const ActionMorphism m = std::get<ActionMorphism>(suite_instance(TheoremId::miraj, 23, k));
    const ActorOfActions pa = miraj_to_actor(m);
    CHECK_FALSE(validate_actor_of_actions(pa));
    const ActionMorphism back = miraj_to_morphism(pa);
    CHECK(back.psi == m.psi);
    CHECK(back.f == m.f);
    CHECK(miraj_to_actor(back).actor == pa.actor);
    CHECK_FALSE(image_saturation_check(m, pa).any_violated());
  }
}

TEST_CASE("structure, commut, enfin, constant on generated instances") {
  for (std::size_t k = 0; k < 30; ++k) {
    const ActorOfActions pa = actor_action_cell(TheoremId::structure, 25, k);
    CHECK_FALSE(structure_check(pa).any_violated());
    CHECK_FALSE(lemma_constant_check(pa.actor, &pa).any_violated());
    const Actor phi = std::get<Actor>(suite_instance(TheoremId::enfin, 25, k));
    CHECK_FALSE(enfin_check(phi).any_violated());
  }
}

TEST_CASE("saturation equals the diamond orbit union of the anchored image") {
  for (std::size_t k = 0; k < 30; ++k) {
    const ActorOfActions pa = actor_action_cell(TheoremId::siaia, 27, k);
    Subset img(pa.target->gpd().size());
    for (Index s = 0; s < pa.source->size(); ++s) img.set(pa.target->anchor(pa.g[s]));
    CHECK(anchored_image(pa) == img);
    CHECK(saturates(pa) == diamond_saturation(pa.actor, img).all());
  }
}
