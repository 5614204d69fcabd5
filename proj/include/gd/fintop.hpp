#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gd/report.hpp"
#include "gd/subset.hpp"

namespace gd {

/// A finite topological space.
///
/// Finite topologies are Alexandrov: every point x has a smallest open
/// neighbourhood U_x, and a set is open iff it contains U_x for each of its
/// points. The space stores U_x per point; the open family is recovered on
/// demand. Specialization order: x <= y iff y is in U_x.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  static FiniteSpace discrete(std::size_t n, std::vector<std::string> labels = {});
  static FiniteSpace indiscrete(std::size_t n, std::vector<std::string> labels = {});

  /// Topology generated by `generators` (closed under union and intersection,
  /// with the empty and full sets added).
  static FiniteSpace generated(std::size_t n, const std::vector<Subset>& generators,
                               std::vector<std::string> labels = {});

  /// `opens` must already be a topology once the empty and full sets are added.
  static FiniteSpace from_opens(std::size_t n, const std::vector<Subset>& opens,
                                std::vector<std::string> labels = {});

  /// `nbhd[x]` is U_x; must describe a preorder (x in U_x, y in U_x => U_y in U_x).
  static FiniteSpace from_neighborhoods(std::vector<Subset> nbhd,
                                        std::vector<std::string> labels = {});

  std::size_t size() const { return nbhd_.size(); }
  const Subset& neighborhood(Index x) const { return nbhd_[x]; }
  const std::vector<Subset>& neighborhoods() const { return nbhd_; }
  const std::string& label(Index x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool leq(Index x, Index y) const { return nbhd_[x].test(y); }

  bool is_open(const Subset& s) const;
  bool is_closed(const Subset& s) const;
  Subset closure(const Subset& s) const;
  Subset interior(const Subset& s) const;
  bool is_dense(const Subset& s) const;
  bool is_nowhere_dense(const Subset& s) const;

  bool is_discrete() const;
  /// T1 (for finite spaces: discrete) - the finite stand-in for Hausdorff.
  bool is_t1() const { return is_discrete(); }

  /// Every open set, in increasing order; throws if there are more than `cap`.
  std::vector<Subset> opens(std::size_t cap = 1u << 16) const;
  /// Distinct minimal neighbourhoods in point order; generates the topology.
  std::vector<Subset> basis() const;

  /// Subspace topology on `s`; points renumbered in increasing id order.
  FiniteSpace subspace(const Subset& s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.nbhd_ == b.nbhd_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Subset> nbhd_;
  std::vector<std::string> labels_;
};

/// Product topology; point (i, j) gets id i * b.size() + j.
FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b);

/// ok iff `opens` contains the empty and full sets and is closed under
/// pairwise union and intersection. The witness is the first offending pair
/// of family indices in lexicographic order.
Report validate_space(std::size_t n, const std::vector<Subset>& opens);

bool is_continuous(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Index> f);
bool is_open_map(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Index> f);
bool is_homeomorphism(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Index> f);

/// Family of "compact" subsets of a carrier.
///
/// On a finite carrier a family closed under subsets and pairwise unions is
/// P(T) for T the union of its members; closure stability makes T closed.
/// The bornology is stored as T (`bound`).
class Bornology {
 public:
  Bornology() = default;

  static Bornology all_subsets(std::size_t n);
  /// Bounded sets are the subsets of closure(core).
  static Bornology restricted(const FiniteSpace& s, const Subset& core);
  /// Bounded sets are the subsets of `bound`, which must be closed.
  static Bornology from_bound(const FiniteSpace& s, const Subset& bound);

  std::size_t carrier_size() const { return bound_.size(); }
  bool is_all() const { return bound_.all(); }
  const Subset& bound() const { return bound_; }
  const std::optional<Subset>& core() const { return core_; }

  bool is_bounded(const Subset& s) const { return s.is_subset_of(bound_); }
  /// closure(S) bounded; equivalent to S bounded since `bound` is closed.
  bool is_relatively_compact(const FiniteSpace& space, const Subset& s) const {
    return is_bounded(space.closure(s));
  }

  /// Trace on a subspace (points renumbered as FiniteSpace::subspace does).
  Bornology restrict_to(const Subset& sub) const;

  /// Checks the invariants against a carrier topology.
  Report validate(const FiniteSpace& s) const;

  std::string describe() const;

 private:
  Subset bound_;
  std::optional<Subset> core_;
};

/// Preimage of every codomain-bounded set is domain-bounded.
bool is_proper(std::span<const Index> f, const Bornology& dom, const Bornology& cod);

}  // namespace gd
