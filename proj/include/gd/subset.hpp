#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gd {

/// Point, arrow and unit ids are dense indices into their carrier.
using Index = std::uint32_t;
inline constexpr Index kNone = std::numeric_limits<Index>::max();

/// Subsets of a finite carrier, one bit per point id.
using Subset = boost::dynamic_bitset<std::uint64_t>;

/// Total function between two finite carriers, stored as a lookup table.
using Table = std::vector<Index>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Subset empty_set(std::size_t n);
Subset full_set(std::size_t n);
Subset make_subset(std::size_t n, std::span<const Index> ids);
Subset make_subset(std::size_t n, std::initializer_list<Index> ids);
Subset singleton(std::size_t n, Index i);

std::vector<Index> members(const Subset& s);

template <class F>
void for_each_member(const Subset& s, F&& f) {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    f(static_cast<Index>(i));
  }
}

inline bool intersects(const Subset& a, const Subset& b) { return a.intersects(b); }
inline bool subset_of(const Subset& a, const Subset& b) { return a.is_subset_of(b); }

/// f(S) as a subset of a carrier with `cod_size` points.
Subset image(std::span<const Index> f, const Subset& s, std::size_t cod_size);
/// f^{-1}(S).
Subset preimage(std::span<const Index> f, const Subset& s);

bool is_injective(std::span<const Index> f);
bool is_surjective(std::span<const Index> f, std::size_t cod_size);
bool is_injective_on(std::span<const Index> f, const Subset& s);

/// Throws unless every entry of f is a valid id of a carrier with cod_size points.
void check_table(std::span<const Index> f, std::size_t dom_size, std::size_t cod_size,
                 const char* what);

/// g o f
Table compose(std::span<const Index> g, std::span<const Index> f);
Table identity_table(std::size_t n);

std::string to_string(const Subset& s);

/// All subsets of an n-point carrier in increasing bit order; n must be small.
std::vector<Subset> powerset(std::size_t n);

}  // namespace gd
