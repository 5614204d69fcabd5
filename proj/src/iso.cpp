#include "gd/iso.hpp"

#include <algorithm>

namespace gd {

namespace {

struct Search {
  const Groupoid& a;
  const Groupoid& b;
  std::vector<Index> order;  // units first, then the rest
  Table map, back;

  bool consistent(Index x, Index y) const {
    const auto& sa = a.arrows();
    const auto& sb = b.arrows();
    for (Index x2 = 0; x2 < a.size(); ++x2) {
      const Index y2 = map[x2];
      if (y2 == kNone) continue;
      if (sa.leq(x, x2) != sb.leq(y, y2) || sa.leq(x2, x) != sb.leq(y2, y)) return false;
      if (a.inv(x) == x2 && b.inv(y) != y2) return false;
      if (b.inv(y) == y2 && a.inv(x) != x2) return false;
      const Index p = a.mul(x, x2), q = a.mul(x2, x);
      if (p != kNone && map[p] != kNone && map[p] != b.mul(y, y2)) return false;
      if (q != kNone && map[q] != kNone && map[q] != b.mul(y2, y)) return false;
      // products that land on already mapped arrows from the other side
      const Index p2 = b.mul(y, y2), q2 = b.mul(y2, y);
      if (p2 != kNone && back[p2] != kNone && back[p2] != p) return false;
      if (q2 != kNone && back[q2] != kNone && back[q2] != q) return false;
    }
    if (a.inv(x) == x && b.inv(y) != y) return false;
    return true;
  }

  bool complete() const {
    for (Index x = 0; x < a.size(); ++x)
      for (Index x2 = 0; x2 < a.size(); ++x2) {
        const Index p = a.mul(x, x2);
        if (p != kNone && map[p] != b.mul(map[x], map[x2])) return false;
      }
    return true;
  }

  bool run(std::size_t k) {
    if (k == order.size()) return complete();
    const Index x = order[k];
    for (Index y = 0; y < b.size(); ++y) {
      if (back[y] != kNone || a.is_unit(x) != b.is_unit(y)) continue;
      if (!a.is_unit(x) && (map[a.d(x)] != b.d(y) || map[a.r(x)] != b.r(y))) continue;
      if (!consistent(x, y)) continue;
      map[x] = y;
      back[y] = x;
      if (run(k + 1)) return true;
      map[x] = kNone;
      back[y] = kNone;
    }
    return false;
  }
};

std::vector<std::size_t> isotropy_profile(const Groupoid& g) {
  std::vector<std::size_t> v;
  for (Index x : g.unit_list()) v.push_back(isotropy(g, x).count());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<Table> find_isomorphism(const Groupoid& a, const Groupoid& b) {
  if (a.size() > kIsoArrowCap || b.size() > kIsoArrowCap)
    throw Error("are_isomorphic: more than 12 arrows");
  if (a.size() != b.size() || a.unit_count() != b.unit_count()) return std::nullopt;
  if (isotropy_profile(a) != isotropy_profile(b)) return std::nullopt;
  Search s{a, b, {}, Table(a.size(), kNone), Table(b.size(), kNone)};
  for (Index x : a.unit_list()) s.order.push_back(x);
  for (Index x = 0; x < a.size(); ++x)
    if (!a.is_unit(x)) s.order.push_back(x);
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

bool are_isomorphic(const Groupoid& a, const Groupoid& b) { return find_isomorphism(a, b).has_value(); }

Groupoid pair_groupoid(const FiniteSpace& D) {
  Groupoid g = pair_groupoid(D.size(), D.labels());
  FiniteSpace top = product_space(D, D);
  top.set_labels(g.arrows().labels());
  return g.with_topology(std::move(top));
}

}  // namespace gd
