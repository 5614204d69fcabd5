#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gd/action.hpp"
#include "gd/dynamics.hpp"
#include "gd/fintop.hpp"
#include "gd/groupoid.hpp"
#include "gd/report.hpp"

namespace gd {

/// Xi(pi, A): arrows are triples (a, xi, b) with pi(a) = r(xi), pi(b) = d(xi),
/// numbered in lexicographic order. Unit (a, pi(a), a) is identified with a.
struct PullbackGroupoid {
  GroupoidPtr base;
  FiniteSpace aspace;
  Table pi;  ///< A -> unit arrow ids of base
  GroupoidPtr realized;
  std::vector<std::array<Index, 3>> triples;
  Table Pi;       ///< realized arrow -> base arrow
  Table unit_of;  ///< a -> arrow id of (a, pi(a), a)

  /// Arrow id of (a, xi, b), or kNone if the triple is not in Xi(pi, A).
  Index find(Index a, Index xi, Index b) const;
  Index D(Index t) const { return triples[t][2]; }
  Index R(Index t) const { return triples[t][0]; }
};

/// Throws if pi is not a continuous surjection onto the units.
PullbackGroupoid build_pullback(const GroupoidPtr& g, const FiniteSpace& A, std::span<const Index> pi,
                                bool validate = true);
/// Pullback along the identity of the unit space (A = X).
PullbackGroupoid pullback_over_identity(const GroupoidPtr& g);

/// Theta(pi, A) acting on Sigma |x| A = {(s, a) : rho(s) = pi(a)}, pairs
/// numbered lexicographically, anchor pr2.
struct PullbackAction {
  ActionPtr source;
  PullbackGroupoid pb;
  ActionPtr realized;
  std::vector<std::pair<Index, Index>> pairs;
  Table pr1;  ///< pair -> sigma
  Table pr2;  ///< pair -> a

  Index find(Index s, Index a) const;
  /// (Pi, pr1) as a morphism onto the source action.
  ActionMorphism projection() const;
};

PullbackAction build_pullback_action(const ActionPtr& theta, const PullbackGroupoid& pb,
                                     bool validate = true);

/// Prop. inzbor identity on one pair (M, N).
bool pullback_recurrence_identity(const PullbackAction& pa, const Subset& M, const Subset& N);

/// Bornology on Xi(pi, A) induced from A x Xi x A.
Bornology pullback_bornology(const PullbackGroupoid& pb, const Bornology& onA,
                             const Bornology& arrows);

/// Pi proper when pi is proper. Gated on pi proper and on r, d mapping
/// bounded arrow sets to bounded unit sets (automatic for genuine compactness).
CheckReport pullback_proper_check(const PullbackGroupoid& pb, const Bornology& onA,
                                  const Bornology& onX, const Bornology& arrows,
                                  const Bornology& pb_arrows);

struct GeneralizedVagueMorphism {
  PullbackGroupoid pb;
  PullbackGroupoid pb_prime;
  Table gamma;  ///< A -> A'
  Table Gamma;  ///< pb arrows -> pb' arrows

  /// Gamma_2 = Pi' o Gamma.
  Table Gamma2() const;
};

/// Rebuilds Gamma(a, xi, b) = (gamma(a), Gamma2(a, xi, b), gamma(b)).
/// Throws if some image triple is not an arrow of pb'.
Table gamma_from_gamma2(const PullbackGroupoid& pb, const PullbackGroupoid& pb_prime,
                        std::span<const Index> gamma, std::span<const Index> Gamma2);

Report validate_gvm(const GeneralizedVagueMorphism& v);

struct GVMOfActions {
  GeneralizedVagueMorphism gvm;
  ActionPtr source;
  ActionPtr target;
  Table h;
  PullbackAction pa;        ///< Theta(pi, A)
  PullbackAction pa_prime;  ///< Theta'(pi', A')

  /// (Gamma, h x gamma); h x gamma is partial (kNone) where condition (i) fails.
  ActionMorphism lifted() const;
};

GVMOfActions make_gvm_action(ActionPtr source, ActionPtr target, const FiniteSpace& A,
                             std::span<const Index> pi, const FiniteSpace& A_prime,
                             std::span<const Index> pi_prime, Table gamma, Table Gamma,
                             Table h, bool validate_pullbacks = true);

Report validate_gvm_action(const GVMOfActions& va);

/// A = X, A' = X', gamma = psi, Gamma(x, xi, y) = (psi x, Psi xi, psi y), h = f.
/// Throws if m is invalid or psi is not injective (condition (i) needs it).
GVMOfActions embed_ordinary(const ActionMorphism& m);

struct ThmBoth {
  Subset lhs;  ///< Gamma[Pi^-1(Xi~_M^N)]
  Subset rhs;  ///< Pi'^-1(Xi'~_{h(M)}^{h(N)})
  bool inclusion = false;
  bool eq_hyp = false;
  bool equality = false;
  bool vormula = false;
  bool bormula = false;
  bool vormula_eq = false;
  bool bormula_eq = false;
};
ThmBoth thm_both_check(const GVMOfActions& va, const Subset& M, const Subset& N);

/// Gamma surjective, h and gamma injective.
bool equality_hypotheses(const GVMOfActions& va);

CheckReport thm_color_check(const GVMOfActions& va);

/// Transfer battery when h is surjective, plus the minimal-preimage search
/// and the periodic / almost periodic corollaries.
CheckReport transport_profile(const GVMOfActions& va, const Bornology& arrows,
                              const Bornology& arrows_prime);
CheckReport transport_profile(const GVMOfActions& va);

/// Minimal sets of an action (closed invariant, every orbit dense in it).
std::vector<Subset> minimal_sets(const Action& a);

struct VagueBornologies {
  Bornology arrows, arrows_prime;  ///< on Xi, Xi'
  Bornology A, A_prime;
  Bornology X, X_prime;  ///< on unit spaces, indexed by unit position
  static VagueBornologies all(const GVMOfActions& va);
  bool all_subsets() const;
};

CheckReport prop_rollar_check(const GVMOfActions& va, const VagueBornologies& b);
CheckReport prop_caciu_check(const GVMOfActions& va, const VagueBornologies& b);

}  // namespace gd
