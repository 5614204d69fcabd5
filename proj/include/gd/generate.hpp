#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gd/action.hpp"
#include "gd/actor.hpp"
#include "gd/groupoid.hpp"
#include "gd/serialize.hpp"
#include "gd/vague.hpp"

namespace gd {

using Rng = std::mt19937_64;

struct SmallGroup {
  std::string name;
  std::vector<std::vector<Index>> mul;  ///< identity is 0
  std::size_t order() const { return mul.size(); }
  Index inv(Index g) const;
};

/// C1..C6, V4, S3 in that order.
const std::vector<SmallGroup>& small_groups();
Index group_index(const std::string& name);
/// Subgroups as element masks.
std::vector<Subset> subgroups(Index group);
/// All homomorphisms G -> H as element tables (cached).
const std::vector<Table>& homomorphisms(Index G, Index H);

/// A finite groupoid as a disjoint union of transitive components G x pair(n).
/// Arrow (g, i, j) of component c has id offset[c] + g n^2 + i n + j,
/// with r = (e, i, i) and d = (e, j, j).
struct Model {
  struct Comp {
    Index group;
    std::size_t n;
  };
  std::vector<Comp> comps;
  std::vector<Index> offset;
  std::size_t arrows = 0;

  explicit Model(std::vector<Comp> c);
  Model() = default;
  Index arrow(Index c, Index g, Index i, Index j) const;
  Index unit(Index c, Index i) const { return arrow(c, 0, i, i); }
  std::size_t unit_count() const;
  /// Discrete groupoid built from the model.
  GroupoidPtr build() const;
};

/// Orbit G_c / H x {0..n_c-1} of a component.
struct OrbitSpec {
  Index comp;
  Subset H;
};
/// Action of the model's groupoid on a disjoint union of coset orbits.
/// `point_info` gets (orbit, coset index, unit index) per point.
Action orbit_action(const Model& m, const GroupoidPtr& g, const std::vector<OrbitSpec>& orbits,
                    std::vector<std::array<Index, 3>>* point_info = nullptr);

/// Preorder closure engine: carriers with preorders (up-sets) and structure
/// maps that must be monotone. close() adds the least relations making every
/// map monotone; the result is a valid joint topology.
class PreorderClosure {
 public:
  int add_carrier(std::size_t n);
  int add_carrier(const FiniteSpace& s);
  void add_unary(int from, int to, Table f);
  /// f is dense |a| x |b| with kNone off its domain.
  void add_binary(int a, int b, int to, Table f);
  void relate(int carrier, Index x, Index y);
  void close();
  FiniteSpace space(int carrier, std::vector<std::string> labels) const;
  std::size_t size(int carrier) const { return up_[carrier].size(); }

  void add_groupoid(int arrows, const Groupoid& g);
  void add_action(int arrows, int sigma, const Action& a);

 private:
  struct Unary {
    int from, to;
    Table f;
  };
  struct Binary {
    int a, b, to;
    Table f;
  };
  std::vector<std::vector<Subset>> up_;
  std::vector<Unary> unary_;
  std::vector<Binary> binary_;
};

/// Topologies used by the generators.
enum class Topo { discrete, structured, random };

enum class Steer {
  none,
  equality,    ///< equality hypotheses of label / both / liema
  surjective,  ///< h or g surjective
  eligible,    ///< unit map a homeomorphism (miraj)
  open_nondiscrete,
  bundle,
  nonopen,
};

struct GenOptions {
  Topo topo = Topo::discrete;
  Steer steer = Steer::none;
  std::size_t max_units = 6;
  std::size_t max_arrows = 40;
  std::size_t max_points = 8;
  std::size_t max_orbits = 6;
};

GroupoidPtr gen_groupoid(Rng& rng, const GenOptions& o);
ActionPtr gen_action(Rng& rng, const GenOptions& o);
ActionMorphism gen_morphism(Rng& rng, const GenOptions& o);
GVMOfActions gen_gvm_action(Rng& rng, const GenOptions& o);
Actor gen_actor(Rng& rng, const GenOptions& o);
ActorOfActions gen_actor_action(Rng& rng, const GenOptions& o);

/// Named kinds for the CLI: trivial, pair, group, group_bundle,
/// transformation, pullback_of, random_topologized, action, morphism,
/// gvm_action, actor, actor_action.
struct GeneratorSpec {
  std::string kind;
  std::uint64_t seed = 0;
  Topo topo = Topo::discrete;
  std::size_t units = 0;  ///< 0: random
  std::string group;      ///< for group / transformation
};

/// Throws Error on an infeasible spec.
Instance generate(const GeneratorSpec& spec);

}  // namespace gd
