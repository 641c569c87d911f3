#pragma once

#include <vector>

#include "grpdeg/group.hpp"

namespace grpdeg {

/// Subgroups of the direct product of a and b, computed from Goursat's
/// correspondence: tuples (H1, N1, H2, N2, phi) with Ni normal in Hi and
/// phi an isomorphism H1/N1 -> H2/N2 give the subgroup
/// { (x, y) : phi(x N1) = y N2 }.  Element indices follow the direct-product
/// convention idx = x * b.size + y, so results are directly comparable with
/// the generic lattice enumeration of the product group.
///
/// This is a deliberately independent route kept for cross-checking the
/// generic enumerator; it shares no code with enumerate_subgroups beyond the
/// factor lattices.  Refuses |a|*|b| > order_bound with BoundExceeded.
std::vector<Subgroup> enumerate_subgroups_goursat(const FiniteGroup& a, const FiniteGroup& b,
                                                  long order_bound = 512);

}  // namespace grpdeg
