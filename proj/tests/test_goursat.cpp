#include "doctest.h"

#include <utility>
#include <vector>

#include "grpdeg/errors.hpp"
#include "grpdeg/goursat.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/subgroup.hpp"

using namespace grpdeg;

namespace {

// Both routes sort by (order, member set), so agreement is plain equality.
void check_agreement(const GroupSpec& left, const GroupSpec& right) {
    FiniteGroup a = build_group(left);
    FiniteGroup b = build_group(right);
    FiniteGroup product = build_group(GroupSpec::direct_product(left, right));

    std::vector<Subgroup> goursat = enumerate_subgroups_goursat(a, b);
    SubgroupLattice generic = enumerate_subgroups(product);

    REQUIRE(goursat.size() == generic.size());
    for (std::size_t i = 0; i < goursat.size(); ++i) {
        CHECK(goursat[i].order == generic.subgroups[i].order);
        CHECK(goursat[i].members == generic.subgroups[i].members);
    }
}

}  // namespace

TEST_CASE("Goursat enumeration agrees with the generic lattice") {
    std::vector<std::pair<GroupSpec, GroupSpec>> products = {
        {GroupSpec::cyclic(2), GroupSpec::cyclic(2)},
        {GroupSpec::cyclic(2), GroupSpec::dihedral(4)},
        {GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(3)},
        {GroupSpec::cyclic(3), GroupSpec::dihedral(3)},
        {GroupSpec::cyclic(4), GroupSpec::cyclic(16)},
        {GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(5)},
        {GroupSpec::dihedral(4), GroupSpec::dihedral(4)},
        {GroupSpec::dicyclic(3), GroupSpec::cyclic(5)},
    };
    for (const auto& [left, right] : products) {
        CAPTURE(left.name());
        CAPTURE(right.name());
        check_agreement(left, right);
    }
}

TEST_CASE("Goursat counts for reference products") {
    FiniteGroup z2 = build_group(GroupSpec::cyclic(2));
    FiniteGroup q8 = build_group(GroupSpec::generalized_quaternion(3));
    CHECK(enumerate_subgroups_goursat(z2, q8).size() == 19);

    FiniteGroup v4a = build_group(GroupSpec::cyclic(2));
    CHECK(enumerate_subgroups_goursat(v4a, z2).size() == 5);  // Z2 x Z2
}

TEST_CASE("Goursat respects the order bound") {
    FiniteGroup q8 = build_group(GroupSpec::generalized_quaternion(3));
    FiniteGroup q32 = build_group(GroupSpec::generalized_quaternion(5));
    CHECK_THROWS_AS(enumerate_subgroups_goursat(q8, q32, 128), BoundExceeded);
    CHECK(enumerate_subgroups_goursat(q8, q8, 64).size() > 0);  // bound == product order
}
