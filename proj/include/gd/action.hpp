#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gd/fintop.hpp"
#include "gd/groupoid.hpp"
#include "gd/report.hpp"
#include "gd/subset.hpp"

namespace gd {

using GroupoidPtr = std::shared_ptr<const Groupoid>;

/// Continuous action of a groupoid on a finite space.
///
/// `anchor` maps points to unit arrow ids. `act` is a dense |Xi| x |Sigma|
/// table, kNone off Xi |x| Sigma = {(xi, s) : d(xi) = anchor(s)}.
class Action {
 public:
  Action() = default;
  /// Structural checks only (sizes, ranges); axioms via validate_action.
  Action(GroupoidPtr gpd, FiniteSpace space, Table anchor, Table act);
  static Action from_triples(GroupoidPtr gpd, FiniteSpace space, Table anchor,
                             const std::vector<std::array<Index, 3>>& act);

  const Groupoid& gpd() const { return *gpd_; }
  const GroupoidPtr& gpd_ptr() const { return gpd_; }
  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  Index anchor(Index s) const { return anchor_[s]; }
  const Table& anchor_table() const { return anchor_; }
  /// xi . s, or kNone when d(xi) != anchor(s).
  Index act(Index xi, Index s) const { return act_[xi * size() + s]; }
  const Table& act_table() const { return act_; }
  bool admissible(Index xi, Index s) const { return gpd_->d(xi) == anchor_[s]; }

  /// Sigma_x = anchor^-1(x).
  Subset fiber(Index x) const;

  Action with_topology(FiniteSpace space) const;

  friend bool operator==(const Action& a, const Action& b) {
    return *a.gpd_ == *b.gpd_ && a.space_ == b.space_ && a.anchor_ == b.anchor_ &&
           a.act_ == b.act_;
  }

 private:
  GroupoidPtr gpd_;
  FiniteSpace space_;
  Table anchor_;
  Table act_;
};

using ActionPtr = std::shared_ptr<const Action>;

/// `require_surjective_anchor = false` relaxes only that clause (used by actors).
Report validate_action(const Action& a, bool require_surjective_anchor = true);

Action canonical_action(const GroupoidPtr& g);
Action self_action(const GroupoidPtr& g);
/// Action of the wide subgroupoid delta (as restricted_groupoid) with the
/// same anchor. Throws unless delta is a wide subgroupoid.
Action restrict_action(const Action& a, const Subset& delta, Table* embedding = nullptr);
/// The subgroupoid delta as a groupoid in its own right, arrows renumbered in
/// increasing id order. `embedding` receives the inclusion table.
Groupoid restricted_groupoid(const Groupoid& g, const Subset& delta, Table* embedding = nullptr);

/// Sub-action on an invariant subset, points renumbered in increasing id
/// order. Throws unless S is invariant. Anchor surjectivity is left to
/// validate_action.
Action sub_action(const Action& a, const Subset& S, Table* embedding = nullptr);
/// Disjoint sum of two actions of the same groupoid; b's points follow a's.
Action action_sum(const Action& a, const Action& b);

/// Xi~_M^N = {xi : exists s in M, d(xi) = anchor(s), xi . s in N}.
Subset recurrence_set(const Action& a, const Subset& M, const Subset& N);
/// A . M = {xi . s : xi in A, s in M admissible}.
Subset act_set(const Action& a, const Subset& A, const Subset& M);

/// Group-bundle recurrence formula against the definition. Exhaustive over
/// all M, N when |Sigma| <= 4, else `samples` seeded pairs.
bool recurrence_set_bundle_formula(const Action& a, std::uint64_t seed = 0, int samples = 64);
/// Self action: Xi~_M^N = {xi : Xi^{d(xi)} cap M cap xi^-1 N nonempty},
/// against the definition. Same sweep policy as the bundle formula.
bool self_action_formula(const GroupoidPtr& g, std::uint64_t seed = 0, int samples = 64);

/// A . M open for open A, M, gated on d open. Minimal neighbourhoods suffice
/// since A . M distributes over unions.
CheckReport caofi_check(const Action& a);

Subset orbit(const Action& a, Index s);
Subset orbit_closure(const Action& a, Index s);
/// C_s: least closed invariant set containing s.
Subset smallest_closed_invariant(const Action& a, Index s);
/// Union of orbits of the points of M.
Subset saturate(const Action& a, const Subset& M);
bool is_invariant(const Action& a, const Subset& M);
/// Orbit partition, ordered by least point.
std::vector<Subset> orbits(const Action& a);

/// Morphism of actions (Psi, f).
struct ActionMorphism {
  ActionPtr source;
  ActionPtr target;
  Table psi;
  Table f;

  Table psi_units() const { return unit_restriction(source->gpd(), psi); }
};

Report validate_morphism(const ActionMorphism& m);
ActionMorphism identity_morphism(const ActionPtr& a);
/// m2 o m1; endpoints compared by value. Throws on mismatch or if the
/// composite fails validation.
ActionMorphism compose_morphisms(const ActionMorphism& m2, const ActionMorphism& m1);
bool is_epimorphism(const ActionMorphism& m);
/// (id, anchor) onto the canonical action of the same groupoid.
ActionMorphism terminal_morphism(const ActionPtr& a);

/// Xi acts on Sigma' through Psi when psi is a homeomorphism of unit spaces;
/// returns (Psi, id) from that action to `target`.
ActionMorphism homoconstruction(const GroupoidPtr& xi, const ActionPtr& target,
                                std::span<const Index> Psi);

struct TransportRecurrence {
  Subset lhs;
  Subset rhs;
  bool inclusion = false;
  bool equality_hypotheses_met = false;
  bool equality = false;
};
TransportRecurrence transport_recurrence(const ActionMorphism& m, const Subset& M,
                                         const Subset& N);

}  // namespace gd
