#include "gd/subset.hpp"

#include <algorithm>
#include <sstream>

namespace gd {

Subset empty_set(std::size_t n) { return Subset(n); }

Subset full_set(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

Subset make_subset(std::size_t n, std::span<const Index> ids) {
  Subset s(n);
  for (Index i : ids) {
    if (i >= n) throw Error("point id " + std::to_string(i) + " out of range");
    s.set(i);
  }
  return s;
}

Subset make_subset(std::size_t n, std::initializer_list<Index> ids) {
  return make_subset(n, std::span<const Index>(ids.begin(), ids.size()));
}

Subset singleton(std::size_t n, Index i) {
  if (i >= n) throw Error("point id " + std::to_string(i) + " out of range");
  Subset s(n);
  s.set(i);
  return s;
}

std::vector<Index> members(const Subset& s) {
  std::vector<Index> out;
  out.reserve(s.count());
  for_each_member(s, [&](Index i) { out.push_back(i); });
  return out;
}

Subset image(std::span<const Index> f, const Subset& s, std::size_t cod_size) {
  Subset out(cod_size);
  for_each_member(s, [&](Index i) { out.set(f[i]); });
  return out;
}

Subset preimage(std::span<const Index> f, const Subset& s) {
  Subset out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != kNone && s.test(f[i])) out.set(i);
  }
  return out;
}

bool is_injective(std::span<const Index> f) {
  std::vector<Index> seen(f.begin(), f.end());
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_surjective(std::span<const Index> f, std::size_t cod_size) {
  Subset hit(cod_size);
  for (Index v : f) hit.set(v);
  return hit.all();
}

bool is_injective_on(std::span<const Index> f, const Subset& s) {
  std::vector<Index> seen;
  for_each_member(s, [&](Index i) { seen.push_back(f[i]); });
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

void check_table(std::span<const Index> f, std::size_t dom_size, std::size_t cod_size,
                 const char* what) {
  if (f.size() != dom_size) {
    throw Error(std::string(what) + ": table has " + std::to_string(f.size()) +
                " entries, expected " + std::to_string(dom_size));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= cod_size) {
      throw Error(std::string(what) + ": entry " + std::to_string(i) + " out of range");
    }
  }
}

Table compose(std::span<const Index> g, std::span<const Index> f) {
  Table out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

Table identity_table(std::size_t n) {
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Index>(i);
  return t;
}

std::string to_string(const Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_member(s, [&](Index i) {
    if (!first) os << ',';
    os << i;
    first = false;
  });
  os << '}';
  return os.str();
}

std::vector<Subset> powerset(std::size_t n) {
  if (n > 20) throw Error("powerset of more than 20 points requested");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.emplace_back(n, mask);
  }
  return out;
}

}  // namespace gd
