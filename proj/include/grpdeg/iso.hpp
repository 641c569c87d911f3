#pragma once

#include <vector>

#include "grpdeg/group.hpp"

namespace grpdeg {

/// True iff the two multiplication tables describe isomorphic groups.
/// Backtracking search over generator images, so intended for small groups
/// (the orders arising here stay well under a few hundred).
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Every isomorphism a -> b as an element-index map phi (phi[x] in b).
/// Empty when the groups are not isomorphic.
std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace grpdeg
