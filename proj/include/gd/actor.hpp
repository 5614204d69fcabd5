#pragma once

#include <optional>
#include <vector>

#include "gd/action.hpp"
#include "gd/dynamics.hpp"
#include "gd/fintop.hpp"
#include "gd/groupoid.hpp"
#include "gd/report.hpp"

namespace gd {

/// Algebraic morphism Xi ~> Xi': an action (Xi, mu, diamond) on the arrow
/// space of Xi' commuting with right translations of Xi'.
///
/// `mu` maps arrows of Xi' to unit arrow ids of Xi. `diamond` is dense
/// |Xi| x |Xi'|, kNone unless d(xi) = mu(eta').
struct Actor {
  GroupoidPtr source;
  GroupoidPtr target;
  Table mu;
  Table diamond;
  /// Anchor surjectivity of the underlying action; relaxable per instance.
  bool require_surjective_mu = true;

  Index apply(Index xi, Index eta) const { return diamond[xi * target->size() + eta]; }
  bool admissible(Index xi, Index eta) const { return source->d(xi) == mu[eta]; }
  /// mu restricted to a unit x' of Xi' (arrow id in, arrow id out).
  Index nu(Index unit) const { return mu[unit]; }

  friend bool operator==(const Actor& a, const Actor& b) {
    return *a.source == *b.source && *a.target == *b.target && a.mu == b.mu &&
           a.diamond == b.diamond;
  }
};

Actor actor_from_triples(GroupoidPtr source, GroupoidPtr target, Table mu,
                         const std::vector<std::array<Index, 3>>& diamond,
                         bool require_surjective_mu = true);

/// The underlying action of Xi on the space of arrows of Xi'.
Action as_action(const Actor& phi);

/// Clause order: action_*, mu_surjective, beans, teans, means, mu_factor.
Report validate_actor(const Actor& phi);

/// Left translation of Xi on itself, mu = r.
Actor identity_actor(const GroupoidPtr& g);
/// Ordinary functor Psi with unit map a homeomorphism onto X':
/// xi . eta' = Psi(xi) eta'. Throws when the unit map is not bijective.
Actor functor_actor(const GroupoidPtr& source, const GroupoidPtr& target, std::span<const Index> Psi);

/// (xi1 . eta3) = (xi1 .12 mu23(eta3)) .23 eta3. Throws on endpoint mismatch
/// or when the result does not validate.
Actor compose_actors(const Actor& phi23, const Actor& phi12);

struct ActorOfActions {
  Actor actor;
  ActionPtr source;
  ActionPtr target;
  Table g;
};

/// Clause order: actor_*, endpoints, g_table, g_continuous, fuame, siete.
Report validate_actor_of_actions(const ActorOfActions& pa);
ActorOfActions identity_actor_of_actions(const ActionPtr& theta);
ActorOfActions compose_actor_of_actions(const ActorOfActions& pa23, const ActorOfActions& pa12);

/// Union of the diamond-orbits of the members of S (a subset of arrows of Xi').
Subset diamond_saturation(const Actor& phi, const Subset& S);
/// rho'(g(Sigma)) as a set of unit arrow ids of Xi'.
Subset anchored_image(const ActorOfActions& pa);
/// Sat[rho'(g(Sigma))] == Xi'.
bool saturates(const ActorOfActions& pa);

CheckReport lemma_constant_check(const Actor& phi, const ActorOfActions* pa = nullptr);

struct Liema {
  /// {xi . rho'(g(s)) : s in M, xi . s in N}, the set the inclusion is proved for.
  Subset lhs;
  /// Xi~_M^N . rho'(g(M)) read as an unrestricted set product.
  Subset lhs_setwise;
  Subset rhs;
  bool inclusion = false;
  bool setwise_inclusion = false;
  bool eq_hyp = false;
  bool equality = false;
  /// Members of rhs without a preimage found by first-match witness selection.
  Subset unwitnessed;
};
Liema liema_check(const ActorOfActions& pa, const Subset& M, const Subset& N);

/// Orbit/invariant-set relations, transfer under g surjective, and the
/// periodic / almost periodic transport under saturation.
CheckReport jnitzel_transport(const ActorOfActions& pa, const Bornology& arrows,
                              const Bornology& arrows_prime);
CheckReport jnitzel_transport(const ActorOfActions& pa);

/// Every F_x'(xi) = xi . x' on Xi_{nu(x')} is proper.
bool is_proper_actor(const Actor& phi, const Bornology& arrows, const Bornology& arrows_prime);

/// Limit, recurrent and weakly periodic points carried by g; N/A unless proper.
CheckReport transflim_check(const ActorOfActions& pa, const Bornology& arrows,
                            const Bornology& arrows_prime);

/// Throws unless psi is a homeomorphism between unit spaces.
ActorOfActions miraj_to_actor(const ActionMorphism& m);
/// Throws unless nu is a homeomorphism between unit spaces.
ActionMorphism miraj_to_morphism(const ActorOfActions& pa);

/// Psi(Xi) == Sat(X') and (Psi, f) epi <=> g surjective and Sat[rho'(g(Sigma))] = Xi'.
CheckReport image_saturation_check(const ActionMorphism& m, const ActorOfActions& pa);

/// Yp, Zp are subsets of arrows of Xi' made of units. Throws otherwise.
CheckReport structure_check(const Actor& phi, const Subset& Yp, const Subset& Zp);
/// Sat[rho'(g(Sigma))] is a subgroupoid.
CheckReport structure_check(const ActorOfActions& pa);

CheckReport enfin_check(const Actor& phi);

}  // namespace gd
