#pragma once

#include "grpdeg/arith.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/rational.hpp"

namespace grpdeg {

/// Closed-form subgroup and cyclic-subgroup counts of the dicyclic group of
/// order 4n: tau(2n) + sigma(n) and tau(2n) + n.
BigInt lattice_size_dicyclic(long n);
BigInt cyclic_poset_size_dicyclic(long n);

/// Subgroup count of Z2 x D_{2n'} with n' = 2^{m-1}, m >= 1:
/// 5 sigma(n') + 3 tau(n') - 2n' - 1.  Deliberately restricted to two-power
/// n': the count is wrong for odd n' (Z2 x D6 has 16 subgroups, the
/// expression gives 19), see the unit tests.
BigInt subgroup_count_z2_dihedral(int m);

/// Subgroup count of Z2 x Q_{2^{m+1}}, m >= 2, as 2^{m+2} + 3(m-1).
BigInt subgroup_count_z2_quaternion(int m);

/// Same count via the divisor-sum form 5 sigma(n') + 3 tau(n') - 2n' + 2
/// with n' = 2^{m-1}; kept separate so the two spellings cross-check.
BigInt subgroup_count_z2_quaternion_general(int m);

/// Oracle-backed counts for A = Z2 x Zn: the closed forms below need |L(A)|
/// and the number of cyclic subgroups of A, and no closed expression is used
/// for them; the lattice of the (small) abelian group is enumerated instead.
BigInt subgroup_count_z2xzn(long n);
BigInt cyclic_count_z2xzn(long n);

/// Subgroup commutativity degree of the dicyclic group of order 4n, n >= 1.
Degree sd_dicyclic(long n);

/// Cyclic subgroup commutativity degree of the dicyclic group, n >= 1.
/// Branches on the parity of n.
Degree csd_dicyclic(long n);

/// Degrees of Z2 x Q_{2^{m+1}}, m >= 2 (m = 2 gives Z2 x Q8, both 1).
Degree sd_z2_quaternion(int m);
Degree csd_z2_quaternion(int m);

/// Degrees of the generalized dicyclic group over Z2 x Zn (n even).
/// Dispatch over n = 2^m * m_odd:
///   n = 2                      -> 1 (the group is abelian of order 8);
///   m_odd = 1, m >= 2, AHalf   -> the Z2 x Q_{2^{m+1}} closed form;
///   otherwise                  -> the general case-(i) expression.
/// The general expression is only established for m >= 2; for m = 1 with
/// m_odd > 1 it demonstrably still matches the oracle, but callers must opt
/// in via allow_extrapolated or get a DomainError.
Degree sd_gen_dicyclic(long n, GammaSquare choice, bool allow_extrapolated = false);
Degree csd_gen_dicyclic(long n, GammaSquare choice, bool allow_extrapolated = false);

}  // namespace grpdeg
