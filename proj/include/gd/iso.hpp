#pragma once

#include <optional>

#include "gd/fintop.hpp"
#include "gd/groupoid.hpp"

namespace gd {

inline constexpr std::size_t kIsoArrowCap = 12;

/// Arrow bijection respecting d, r, inv, mul and the topology, if one exists.
/// Throws when either groupoid has more than 12 arrows.
std::optional<Table> find_isomorphism(const Groupoid& a, const Groupoid& b);
bool are_isomorphic(const Groupoid& a, const Groupoid& b);

/// Pair groupoid on D with the product topology on D x D.
Groupoid pair_groupoid(const FiniteSpace& D);

}  // namespace gd
