#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "gd/fintop.hpp"
#include "gd/report.hpp"
#include "gd/subset.hpp"

namespace gd {

/// Finite topological groupoid.
///
/// Arrows are ids 0..n-1 with a topology; units are a subset of the arrows
/// and every unit-valued map (d, r, anchors) returns arrow ids. The
/// multiplication is a dense n x n table, kNone off the composable pairs.
class Groupoid {
 public:
  Groupoid() = default;

  /// Structural constructor: tables must have the right sizes and ranges and
  /// `mul` must be defined exactly on {(i, j) : src[i] == rng[j]}. Axioms are
  /// not checked here; see validate_groupoid.
  Groupoid(FiniteSpace arrows, Subset units, Table src, Table rng, Table inv, Table mul);

  /// Same, with the multiplication given as triples i * j = k.
  static Groupoid from_triples(FiniteSpace arrows, Subset units, Table src, Table rng,
                               Table inv, const std::vector<std::array<Index, 3>>& mul);

  std::size_t size() const { return arrows_.size(); }
  std::size_t unit_count() const { return unit_list_.size(); }
  const FiniteSpace& arrows() const { return arrows_; }
  const Subset& units() const { return units_; }
  /// Units in increasing arrow-id order.
  const std::vector<Index>& unit_list() const { return unit_list_; }
  /// Position of unit `x` in unit_list().
  Index unit_position(Index x) const { return unit_pos_[x]; }
  bool is_unit(Index x) const { return units_.test(x); }

  Index d(Index a) const { return src_[a]; }
  Index r(Index a) const { return rng_[a]; }
  Index inv(Index a) const { return inv_[a]; }
  bool composable(Index a, Index b) const { return src_[a] == rng_[b]; }
  /// a * b, or kNone when d(a) != r(b).
  Index mul(Index a, Index b) const { return mul_[a * size() + b]; }

  const Table& src() const { return src_; }
  const Table& rng() const { return rng_; }
  const Table& inv_table() const { return inv_; }
  const Table& mul_table() const { return mul_; }

  /// Subspace topology of the units, points in unit_list() order.
  FiniteSpace unit_space() const { return arrows_.subspace(units_); }

  /// Same groupoid with a different arrow topology (labels kept if absent).
  Groupoid with_topology(FiniteSpace arrows) const;

  std::string label(Index a) const { return arrows_.label(a); }

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.arrows_ == b.arrows_ && a.units_ == b.units_ && a.src_ == b.src_ &&
           a.rng_ == b.rng_ && a.inv_ == b.inv_ && a.mul_ == b.mul_;
  }

 private:
  FiniteSpace arrows_;
  Subset units_;
  Table src_, rng_, inv_, mul_;
  std::vector<Index> unit_list_;
  Table unit_pos_;
};

Report validate_groupoid(const Groupoid& g);

/// Pair groupoid on n points: arrow (x, y) has id x * n + y, r = x, d = y.
Groupoid pair_groupoid(std::size_t n, std::vector<std::string> point_labels = {});
/// Group with identity 0 from a Cayley table (cayley[a][b] = ab).
Groupoid group_groupoid(const std::vector<std::vector<Index>>& cayley,
                        std::vector<std::string> labels = {});
Groupoid cyclic_group(std::size_t n);
/// Units only, with the topology of `space`.
Groupoid trivial_groupoid(const FiniteSpace& space);
/// Product groupoid; arrow (i, j) has id i * b.size() + j, product topology.
Groupoid product_groupoid(const Groupoid& a, const Groupoid& b);
/// Disjoint union; arrows of `b` are shifted by a.size().
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

struct Fibers {
  Subset source;  ///< Xi_M = d^-1(M)
  Subset range;   ///< Xi^N = r^-1(N)
  Subset both;    ///< Xi_M^N
};

/// Throws when M or N contain non-units.
Fibers fibers(const Groupoid& g, const Subset& M, const Subset& N);
/// Xi_x = d^-1(x).
Subset source_fiber(const Groupoid& g, Index x);
Subset range_fiber(const Groupoid& g, Index x);

Subset isotropy(const Groupoid& g, Index x);
Subset unit_orbit(const Groupoid& g, Index x);
bool is_transitive_groupoid(const Groupoid& g);

/// d, r : arrows -> unit space as tables indexed by unit position.
Table source_to_unit_space(const Groupoid& g);
Table range_to_unit_space(const Groupoid& g);

/// d open onto the unit subspace.
bool is_open_groupoid(const Groupoid& g);
bool range_is_open(const Groupoid& g);

struct SubgroupoidCheck {
  bool is_subgroupoid = false;
  bool is_wide = false;
};
SubgroupoidCheck subgroupoid_check(const Groupoid& g, const Subset& delta);

/// {ab : a in A, b in B, d(a) = r(b)}.
Subset product_set(const Groupoid& g, const Subset& A, const Subset& B);

struct Recognition {
  bool is_group = false;
  bool is_group_bundle = false;
  bool is_pair_groupoid = false;
};
Recognition recognize(const Groupoid& g);

/// Continuous functor check for an arrow map G -> H.
Report validate_functor(const Groupoid& G, const Groupoid& H, std::span<const Index> psi);

/// Restriction of an arrow map to the units of G.
Table unit_restriction(const Groupoid& G, std::span<const Index> psi);

/// The arrow map as a map of unit spaces (positions), for homeomorphism tests.
Table unit_map_positions(const Groupoid& G, const Groupoid& H, std::span<const Index> psi);

}  // namespace gd
