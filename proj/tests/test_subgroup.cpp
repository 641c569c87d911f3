#include "doctest.h"

#include <algorithm>
#include <vector>

#include "grpdeg/errors.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/subgroup.hpp"

using namespace grpdeg;

namespace {

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.size; ++x) {
        int xi = g.inv[static_cast<std::size_t>(x)];
        bool ok = true;
        h.members.for_each([&](int m) {
            if (!h.members.test(g.at(g.at(x, m), xi))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("generated subgroups close under multiplication") {
    FiniteGroup g = build_group(GroupSpec::dicyclic(3));
    int a = 2, gamma = 1;

    CHECK(generated_subgroup(g, {}).order == 1);
    CHECK(generated_subgroup(g, {g.identity}).order == 1);
    CHECK(generated_subgroup(g, {a}).order == 6);
    CHECK(generated_subgroup(g, {gamma}).order == 4);
    CHECK(generated_subgroup(g, {a, gamma}).order == 12);

    Subgroup whole = generated_subgroup(g, {a, gamma});
    for (int i = 0; i < g.size; ++i) CHECK(whole.members.test(i));
}

TEST_CASE("Dic12 lattice matches the hand enumeration") {
    FiniteGroup g = build_group(GroupSpec::dicyclic(3));
    SubgroupLattice lat = enumerate_subgroups(g);

    CHECK(lat.size() == 8);
    CHECK(lat.cyclic_count() == 7);
    CHECK(enumerate_cyclic_subgroups(g).size() == 7);

    // Sorted by (order, member set): trivial first, whole group last.
    std::vector<int> orders;
    for (const Subgroup& h : lat.subgroups) orders.push_back(h.order);
    CHECK(orders == std::vector<int>{1, 2, 3, 4, 4, 4, 6, 12});
    CHECK(lat.subgroups.front().order == 1);
    CHECK(lat.subgroups.back().order == g.size);
    CHECK_FALSE(lat.cyclic[7]);

    // Lagrange and closure for every entry.
    for (const Subgroup& h : lat.subgroups) {
        CHECK(g.size % h.order == 0);
        CHECK(h.members.test(g.identity));
        bool closed = true;
        h.members.for_each([&](int x) {
            h.members.for_each([&](int y) {
                if (!h.members.test(g.at(x, y))) closed = false;
            });
        });
        CHECK(closed);
    }
}

TEST_CASE("the three order-4 subgroups of Dic12 pairwise fail to permute") {
    FiniteGroup g = build_group(GroupSpec::dicyclic(3));
    SubgroupLattice lat = enumerate_subgroups(g);
    // Indices 3,4,5 hold the order-4 cyclic subgroups <g>, <a*g>, <a^2*g>.
    for (std::size_t i = 3; i <= 5; ++i) {
        for (std::size_t j = 3; j <= 5; ++j) {
            bool expected = i == j;
            CHECK(permutes(g, lat.subgroups[i], lat.subgroups[j]) == expected);
        }
    }

    std::size_t permuting = 0;
    for (const Subgroup& h : lat.subgroups)
        for (const Subgroup& k : lat.subgroups)
            permuting += permutes(g, h, k) ? 1 : 0;
    CHECK(permuting == 58);
}

TEST_CASE("permutes is symmetric and respects normality and inclusion") {
    std::vector<GroupSpec> zoo = {
        GroupSpec::dicyclic(3),
        GroupSpec::dicyclic(4),
        GroupSpec::generalized_dicyclic(6, GammaSquare::B),
        GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(3)),
        GroupSpec::dihedral(6),
    };
    for (const GroupSpec& spec : zoo) {
        CAPTURE(spec.name());
        FiniteGroup g = build_group(spec);
        SubgroupLattice lat = enumerate_subgroups(g);
        for (const Subgroup& h : lat.subgroups) {
            bool h_normal = is_normal(g, h);
            for (const Subgroup& k : lat.subgroups) {
                bool hk = permutes(g, h, k);
                CHECK(hk == permutes(g, k, h));
                if (h_normal) CHECK(hk);
                if (h.members.is_subset_of(k.members)) CHECK(hk);
            }
        }
    }
}

TEST_CASE("product set sizes obey |HK| |H&K| = |H| |K| for permuting pairs") {
    FiniteGroup g = build_group(GroupSpec::dicyclic(4));
    SubgroupLattice lat = enumerate_subgroups(g);
    std::size_t checked = 0;
    for (const Subgroup& h : lat.subgroups) {
        for (const Subgroup& k : lat.subgroups) {
            if (!permutes(g, h, k)) continue;
            ElementSet hk = product_set(g, h.members, k.members);
            ElementSet meet = h.members & k.members;
            CHECK(hk.count() * meet.count() == h.order * k.order);
            ++checked;
        }
    }
    CHECK(checked == 113);  // the permuting pairs of Dic16
}

TEST_CASE("brute-force degrees reproduce the worked dicyclic values") {
    struct Row {
        long n;
        const char* sd;
        const char* csd;
    };
    // Frozen against the published worked examples for Dic12/Dic16 and the
    // abelian/Q8 degenerate cases.
    const Row rows[] = {
        {1, "1", "1"},
        {2, "1", "1"},
        {3, "29/32", "43/49"},
        {4, "113/121", "7/8"},
    };
    for (const Row& r : rows) {
        CAPTURE(r.n);
        FiniteGroup g = build_group(GroupSpec::dicyclic(r.n));
        SubgroupLattice lat = enumerate_subgroups(g);
        CHECK(sd_bruteforce(g, lat).str() == r.sd);
        CHECK(csd_bruteforce(g, lat).str() == r.csd);
    }

    // Raw forms come straight from the pair counts over the lattice.
    FiniteGroup dic12 = build_group(GroupSpec::dicyclic(3));
    SubgroupLattice lat12 = enumerate_subgroups(dic12);
    CHECK(sd_bruteforce(dic12, lat12).raw_str() == "58/64");
    CHECK(csd_bruteforce(dic12, lat12).raw_str() == "43/49");
    FiniteGroup dic16 = build_group(GroupSpec::dicyclic(4));
    SubgroupLattice lat16 = enumerate_subgroups(dic16);
    CHECK(csd_bruteforce(dic16, lat16).raw_str() == "56/64");
}

TEST_CASE("abelian groups have degree one") {
    for (const GroupSpec& spec : {GroupSpec::cyclic(24), GroupSpec::abelian({2, 2, 2, 2}),
                                  GroupSpec::abelian({4, 4}), GroupSpec::abelian({2, 12})}) {
        CAPTURE(spec.name());
        FiniteGroup g = build_group(spec);
        SubgroupLattice lat = enumerate_subgroups(g);
        CHECK(sd_bruteforce(g, lat).is_one());
        CHECK(csd_bruteforce(g, lat).is_one());
    }
}

TEST_CASE("permuter counts") {
    FiniteGroup g = build_group(GroupSpec::dicyclic(3));
    SubgroupLattice lat = enumerate_subgroups(g);
    CHECK(permuter_count(g, lat, lat.subgroups.front()) == 8);  // trivial subgroup
    CHECK(permuter_count(g, lat, lat.subgroups.back()) == 8);   // whole group
    CHECK(permuter_count(g, lat, lat.subgroups[3]) == 6);       // order-4 <g>
    CHECK(permuter_count(g, lat, lat.subgroups[3], true) == 5); // among the 7 cyclic ones

    FiniteGroup ab = build_group(GroupSpec::cyclic(12));
    SubgroupLattice ab_lat = enumerate_subgroups(ab);
    for (const Subgroup& h : ab_lat.subgroups)
        CHECK(permuter_count(ab, ab_lat, h) == ab_lat.size());
}

TEST_CASE("generating sets regenerate their subgroup") {
    for (const GroupSpec& spec :
         {GroupSpec::dicyclic(3),
          GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(3))}) {
        CAPTURE(spec.name());
        FiniteGroup g = build_group(spec);
        SubgroupLattice lat = enumerate_subgroups(g);
        for (std::size_t i = 0; i < lat.size(); ++i) {
            const Subgroup& h = lat.subgroups[i];
            std::vector<int> gens = generating_set(g, h);
            CHECK(generated_subgroup(g, gens) == h);
            if (h.order == 1) CHECK(gens.empty());
            if (lat.cyclic[i]) CHECK(gens.size() <= 1);
        }
    }
}

TEST_CASE("the order bound refuses oversized groups") {
    FiniteGroup big = build_group(GroupSpec::dicyclic(33));  // order 132
    CHECK_THROWS_AS(enumerate_subgroups(big, 128), BoundExceeded);

    FiniteGroup edge = build_group(GroupSpec::dicyclic(32));  // order 128
    CHECK(enumerate_subgroups(edge, 128).size() > 0);

    FiniteGroup small = build_group(GroupSpec::dicyclic(3));
    CHECK(enumerate_subgroups(small, 12).size() == 8);  // bound == order passes
}
