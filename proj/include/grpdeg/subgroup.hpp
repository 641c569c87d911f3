#pragma once

#include <cstdint>
#include <vector>

#include "grpdeg/elemset.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/rational.hpp"

namespace grpdeg {

// All subgroups of a group, sorted by (order, pointwise set order) so the
// enumeration order is reproducible across runs and platforms.
struct SubgroupLattice {
    const FiniteGroup* group = nullptr;
    std::vector<Subgroup> subgroups;
    std::vector<bool> cyclic;  // parallel to subgroups

    std::size_t size() const { return subgroups.size(); }
    std::size_t cyclic_count() const;
    // Indices into subgroups restricted to cyclic members.
    std::vector<std::size_t> cyclic_indices() const;
};

// Closure of `generators` under multiplication (BFS from the identity).
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

std::vector<Subgroup> enumerate_cyclic_subgroups(const FiniteGroup& g);

// Small generating set for display: starts from a maximal-order member, then
// greedily adjoins the smallest member not yet generated. Deterministic, and
// cyclic subgroups come out with exactly one generator.
std::vector<int> generating_set(const FiniteGroup& g, const Subgroup& h);

// Full lattice: cyclic subgroups closed under pairwise join.  Refuses groups
// larger than order_bound with BoundExceeded before doing any work.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, long order_bound = 512);

// The product set HK = {hk : h in H, k in K}; a subgroup iff H and K permute.
ElementSet product_set(const FiniteGroup& g, const ElementSet& h, const ElementSet& k);

// HK = KH, i.e. the product set is a subgroup.
bool permutes(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// Number of subgroups in the lattice (or its cyclic part) permuting with H.
std::size_t permuter_count(const FiniteGroup& g, const SubgroupLattice& lat, const Subgroup& h,
                           bool cyclic_only = false);

// Exact permutability degrees from the lattice itself, no formulas involved.
Degree sd_bruteforce(const FiniteGroup& g, const SubgroupLattice& lat);
Degree csd_bruteforce(const FiniteGroup& g, const SubgroupLattice& lat);

}  // namespace grpdeg
