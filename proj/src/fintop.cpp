#include "gd/fintop.hpp"

#include <set>

namespace gd {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw Error("label count does not match point count");
  return labels;
}

// U_x = intersection of every member of `family` that contains x.
std::vector<Subset> minimal_neighborhoods(std::size_t n, const std::vector<Subset>& family) {
  std::vector<Subset> nbhd(n, full_set(n));
  for (const auto& o : family) {
    if (o.size() != n) throw Error("open set has wrong carrier size");
    for_each_member(o, [&](Index x) { nbhd[x] &= o; });
  }
  return nbhd;
}

}  // namespace

FiniteSpace FiniteSpace::discrete(std::size_t n, std::vector<std::string> labels) {
  std::vector<Subset> nbhd;
  nbhd.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nbhd.push_back(singleton(n, static_cast<Index>(i)));
  return from_neighborhoods(std::move(nbhd), std::move(labels));
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n, std::vector<std::string> labels) {
  return from_neighborhoods(std::vector<Subset>(n, full_set(n)), std::move(labels));
}

FiniteSpace FiniteSpace::generated(std::size_t n, const std::vector<Subset>& generators,
                                   std::vector<std::string> labels) {
  return from_neighborhoods(minimal_neighborhoods(n, generators), std::move(labels));
}

FiniteSpace FiniteSpace::from_opens(std::size_t n, const std::vector<Subset>& opens,
                                    std::vector<std::string> labels) {
  std::vector<Subset> family = opens;
  family.push_back(empty_set(n));
  family.push_back(full_set(n));
  if (auto v = validate_space(n, family)) {
    throw Error("open family is not a topology: " + v->clause + " " + v->witness);
  }
  return from_neighborhoods(minimal_neighborhoods(n, family), std::move(labels));
}

FiniteSpace FiniteSpace::from_neighborhoods(std::vector<Subset> nbhd,
                                            std::vector<std::string> labels) {
  const std::size_t n = nbhd.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (nbhd[x].size() != n) throw Error("neighbourhood has wrong carrier size");
    if (!nbhd[x].test(x)) throw Error("point not in its own neighbourhood");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for_each_member(nbhd[x], [&](Index y) {
      if (!nbhd[y].is_subset_of(nbhd[x])) throw Error("neighbourhoods are not transitive");
    });
  }
  FiniteSpace s;
  s.nbhd_ = std::move(nbhd);
  s.labels_ = default_labels(n, std::move(labels));
  return s;
}

void FiniteSpace::set_labels(std::vector<std::string> labels) {
  labels_ = default_labels(size(), std::move(labels));
}

bool FiniteSpace::is_open(const Subset& s) const {
  for (auto x = s.find_first(); x != Subset::npos; x = s.find_next(x)) {
    if (!nbhd_[x].is_subset_of(s)) return false;
  }
  return true;
}

bool FiniteSpace::is_closed(const Subset& s) const { return is_open(~s); }

Subset FiniteSpace::closure(const Subset& s) const {
  Subset out(size());
  for (std::size_t y = 0; y < size(); ++y) {
    if (nbhd_[y].intersects(s)) out.set(y);
  }
  return out;
}

Subset FiniteSpace::interior(const Subset& s) const {
  Subset out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (nbhd_[x].is_subset_of(s)) out.set(x);
  }
  return out;
}

bool FiniteSpace::is_dense(const Subset& s) const { return closure(s).all(); }

bool FiniteSpace::is_nowhere_dense(const Subset& s) const { return interior(closure(s)).none(); }

bool FiniteSpace::is_discrete() const {
  for (const auto& u : nbhd_) {
    if (u.count() != 1) return false;
  }
  return true;
}

std::vector<Subset> FiniteSpace::opens(std::size_t cap) const {
  std::set<Subset> found{empty_set(size())};
  std::vector<Subset> frontier{empty_set(size())};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& o : frontier) {
      for (std::size_t x = 0; x < size(); ++x) {
        if (o.test(x)) continue;
        Subset grown = o | nbhd_[x];
        if (found.insert(grown).second) {
          if (found.size() > cap) throw Error("open family exceeds enumeration cap");
          next.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<Subset> FiniteSpace::basis() const {
  std::vector<Subset> out;
  std::set<Subset> seen;
  for (const auto& u : nbhd_) {
    if (seen.insert(u).second) out.push_back(u);
  }
  return out;
}

FiniteSpace FiniteSpace::subspace(const Subset& s) const {
  const auto pts = members(s);
  std::vector<Subset> nbhd;
  std::vector<std::string> labels;
  nbhd.reserve(pts.size());
  for (Index x : pts) {
    Subset u(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (nbhd_[x].test(pts[j])) u.set(j);
    }
    nbhd.push_back(std::move(u));
    labels.push_back(labels_[x]);
  }
  return from_neighborhoods(std::move(nbhd), std::move(labels));
}

FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<Subset> nbhd;
  std::vector<std::string> labels;
  nbhd.reserve(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Subset u(n);
      for_each_member(a.neighborhood(static_cast<Index>(i)), [&](Index i2) {
        for_each_member(b.neighborhood(static_cast<Index>(j)),
                        [&](Index j2) { u.set(i2 * b.size() + j2); });
      });
      nbhd.push_back(std::move(u));
      labels.push_back("(" + a.label(static_cast<Index>(i)) + "," +
                       b.label(static_cast<Index>(j)) + ")");
    }
  }
  return FiniteSpace::from_neighborhoods(std::move(nbhd), std::move(labels));
}

Report validate_space(std::size_t n, const std::vector<Subset>& opens) {
  std::set<Subset> family;
  for (const auto& o : opens) {
    if (o.size() != n) return Violation{"carrier", "open set of wrong size " + to_string(o)};
    family.insert(o);
  }
  if (!family.count(empty_set(n))) return Violation{"empty_set", "missing empty set"};
  if (!family.count(full_set(n))) return Violation{"full_set", "missing full point set"};
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!family.count(opens[i] | opens[j])) {
        return Violation{"union", "opens #" + std::to_string(i) + " " + to_string(opens[i]) +
                                      " and #" + std::to_string(j) + " " + to_string(opens[j])};
      }
      if (!family.count(opens[i] & opens[j])) {
        return Violation{"intersection", "opens #" + std::to_string(i) + " " +
                                             to_string(opens[i]) + " and #" + std::to_string(j) +
                                             " " + to_string(opens[j])};
      }
    }
  }
  return std::nullopt;
}

bool is_continuous(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Index> f) {
  for (std::size_t x = 0; x < dom.size(); ++x) {
    const auto& target = cod.neighborhood(f[x]);
    bool ok = true;
    for_each_member(dom.neighborhood(static_cast<Index>(x)), [&](Index y) {
      if (!target.test(f[y])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_open_map(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Index> f) {
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!cod.is_open(image(f, dom.neighborhood(static_cast<Index>(x)), cod.size()))) return false;
  }
  return true;
}

bool is_homeomorphism(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Index> f) {
  return dom.size() == cod.size() && is_injective(f) && is_continuous(dom, cod, f) &&
         is_open_map(dom, cod, f);
}

Bornology Bornology::all_subsets(std::size_t n) {
  Bornology b;
  b.bound_ = full_set(n);
  return b;
}

Bornology Bornology::restricted(const FiniteSpace& s, const Subset& core) {
  Bornology b;
  b.bound_ = s.closure(core);
  b.core_ = core;
  return b;
}

Bornology Bornology::from_bound(const FiniteSpace& s, const Subset& bound) {
  if (!s.is_closed(bound)) throw Error("bornology bound must be closed");
  Bornology b;
  b.bound_ = bound;
  if (!bound.all()) b.core_ = bound;
  return b;
}

Bornology Bornology::restrict_to(const Subset& sub) const {
  const auto pts = members(sub);
  Bornology b;
  b.bound_ = Subset(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (bound_.test(pts[j])) b.bound_.set(j);
  }
  if (!b.bound_.all()) b.core_ = b.bound_;
  return b;
}

Report Bornology::validate(const FiniteSpace& s) const {
  if (bound_.size() != s.size()) return Violation{"carrier", "bornology carrier size mismatch"};
  if (!s.is_closed(bound_)) return Violation{"closure_stable", "bound " + to_string(bound_)};
  return std::nullopt;
}

std::string Bornology::describe() const {
  if (is_all()) return "all";
  return "core=" + to_string(core_ ? *core_ : bound_);
}

bool is_proper(std::span<const Index> f, const Bornology& dom, const Bornology& cod) {
  if (f.size() != dom.carrier_size()) throw Error("is_proper: domain bornology carrier mismatch");
  for (Index v : f) {
    if (v >= cod.carrier_size()) throw Error("is_proper: codomain bornology carrier mismatch");
  }
  return dom.is_bounded(preimage(f, cod.bound()));
}

}  // namespace gd
