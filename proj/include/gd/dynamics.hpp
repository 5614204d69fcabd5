#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gd/action.hpp"
#include "gd/fintop.hpp"
#include "gd/report.hpp"

namespace gd {

struct DynProfile {
  bool T = false;
  bool PT = false;
  bool WPT = false;
  bool TT1 = false;
  bool TT2 = false;
  bool TT3 = false;
  bool RT = false;
  bool minimal = false;
  /// Point with a dense orbit (PT), with C_s = Sigma (WPT).
  std::optional<Index> pt_witness;
  std::optional<Index> wpt_witness;
  /// Counterexamples for the failing flags, rendered as text.
  std::map<std::string, std::string> witnesses;
};

/// Throws when the action has more than `max_orbits` orbits (the TT checks
/// enumerate unions of orbits).
DynProfile classify(const Action& a, std::size_t max_orbits = 16);

/// Implication chain check; the open-groupoid equivalences are added as
/// clauses gated on d being open.
CheckReport audit_implications(const Action& a, const DynProfile& p);
CheckReport audit_implications(const Action& a);

/// Every invariant subset (union of orbits), in increasing order of orbit mask.
std::vector<Subset> invariant_sets(const Action& a, std::size_t max_orbits = 16);

/// Intersection over bounded k in the d-fibre of closure((Xi_x \ k) . s).
/// `arrows` is a bornology on the arrows of a.gpd().
Subset limit_set(const Action& a, Index s, const Bornology& arrows);
/// {t : Xi~_s^V not relatively compact for every open V containing t}.
Subset limit_set_via_recurrence(const Action& a, Index s, const Bornology& arrows);

Subset fixed_points(const Action& a);
/// Fixed points via Xi~_s^s == Xi_{rho(s)}.
Subset fixed_points_via_recurrence(const Action& a);
Subset recurrent_points(const Action& a, const Bornology& arrows);
Subset wandering_points(const Action& a, const Bornology& arrows);

/// Exists bounded K with K A = Xi_x. Throws unless A is inside Xi_x.
bool is_syndetic(const Groupoid& g, Index x, const Subset& A, const Bornology& arrows);

Subset periodic_points(const Action& a, const Bornology& arrows);
Subset weakly_periodic_points(const Action& a, const Bornology& arrows);
Subset almost_periodic_points(const Action& a, const Bornology& arrows);

struct PointClasses {
  Subset fixed, recurrent, wandering, nonwandering, periodic, weakly_periodic, almost_periodic;
  std::vector<Subset> limit_sets;
  Bornology bornology;
};
PointClasses point_classes(const Action& a, const Bornology& arrows);

/// Closed invariant set in which every orbit is dense (no proper non-empty
/// closed invariant subset).
bool is_minimal_set(const Action& a, const Subset& M);

/// Periodic/almost periodic characterisations. `space` is the bornology on
/// Sigma used for "compact orbit" (defaults to all subsets). Reported in
/// model-level mode when either bornology is restricted.
CheckReport flacara_check(const Action& a, const Bornology& arrows,
                          const std::optional<Bornology>& space = std::nullopt);

}  // namespace gd
