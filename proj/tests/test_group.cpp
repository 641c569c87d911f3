#include "doctest.h"

#include <string>
#include <vector>

#include "grpdeg/errors.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/iso.hpp"

using namespace grpdeg;

namespace {

// Full group-axiom audit of a multiplication table. Associativity is cubic
// in |G|, so callers keep the zoo below order ~100.
void check_axioms(const FiniteGroup& g) {
    REQUIRE(g.size >= 1);
    REQUIRE(g.mul.size() == static_cast<std::size_t>(g.size) * g.size);
    REQUIRE(g.labels.size() == static_cast<std::size_t>(g.size));
    CHECK(g.identity == 0);
    CHECK(g.labels[0] != "");

    for (int i = 0; i < g.size; ++i) {
        CHECK(g.at(g.identity, i) == i);
        CHECK(g.at(i, g.identity) == i);
        CHECK(g.at(i, g.inv[static_cast<std::size_t>(i)]) == g.identity);
        CHECK(g.at(g.inv[static_cast<std::size_t>(i)], i) == g.identity);
    }

    // Latin square: every row and column is a permutation.
    for (int i = 0; i < g.size; ++i) {
        std::vector<bool> row(static_cast<std::size_t>(g.size), false);
        std::vector<bool> col(static_cast<std::size_t>(g.size), false);
        for (int j = 0; j < g.size; ++j) {
            CHECK(!row[static_cast<std::size_t>(g.at(i, j))]);
            CHECK(!col[static_cast<std::size_t>(g.at(j, i))]);
            row[static_cast<std::size_t>(g.at(i, j))] = true;
            col[static_cast<std::size_t>(g.at(j, i))] = true;
        }
    }

    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j)
            for (int k = 0; k < g.size; ++k)
                CHECK(g.at(g.at(i, j), k) == g.at(i, g.at(j, k)));
}

}  // namespace

TEST_CASE("every family builds a valid group table") {
    std::vector<GroupSpec> zoo = {
        GroupSpec::cyclic(1),
        GroupSpec::cyclic(12),
        GroupSpec::abelian({2, 6}),
        GroupSpec::abelian({2, 2, 2}),
        GroupSpec::dihedral(1),
        GroupSpec::dihedral(4),
        GroupSpec::dihedral(6),
        GroupSpec::dicyclic(1),
        GroupSpec::dicyclic(3),
        GroupSpec::dicyclic(4),
        GroupSpec::generalized_quaternion(3),
        GroupSpec::generalized_quaternion(5),
        GroupSpec::generalized_dicyclic(2, GammaSquare::B),
        GroupSpec::generalized_dicyclic(4, GammaSquare::AHalf),
        GroupSpec::generalized_dicyclic(6, GammaSquare::AHalfB),
        GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(3)),
        GroupSpec::direct_product(GroupSpec::cyclic(3), GroupSpec::dihedral(3)),
    };
    for (const GroupSpec& spec : zoo) {
        CAPTURE(spec.name());
        FiniteGroup g = build_group(spec);
        CHECK(g.size == spec.order());
        check_axioms(g);
    }
}

TEST_CASE("spec orders and names") {
    CHECK(GroupSpec::cyclic(4).order() == 4);
    CHECK(GroupSpec::cyclic(4).name() == "Z4");
    CHECK(GroupSpec::abelian({2, 6}).order() == 12);
    CHECK(GroupSpec::abelian({2, 6}).name() == "Z2xZ6");
    CHECK(GroupSpec::dihedral(4).order() == 8);
    CHECK(GroupSpec::dihedral(4).name() == "D8");
    CHECK(GroupSpec::dicyclic(3).order() == 12);
    CHECK(GroupSpec::dicyclic(3).name() == "Dic12");
    CHECK(GroupSpec::generalized_quaternion(4).order() == 16);
    CHECK(GroupSpec::generalized_quaternion(4).name() == "Q16");
    CHECK(GroupSpec::generalized_dicyclic(6, GammaSquare::B).order() == 24);
    CHECK(GroupSpec::generalized_dicyclic(6, GammaSquare::B).name() == "Dic24(Z2xZ6,g2=b)");
    GroupSpec z2q16 =
        GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(4));
    CHECK(z2q16.order() == 32);
    CHECK(z2q16.name() == "Z2xQ16");
}

TEST_CASE("invalid parameters are rejected up front") {
    CHECK_THROWS_AS(GroupSpec::cyclic(0).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::abelian({}).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::abelian({2, 0}).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::dihedral(0).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::dicyclic(-1).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::generalized_quaternion(2).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::generalized_dicyclic(3, GammaSquare::B).order(), DomainError);
    CHECK_THROWS_AS(GroupSpec::generalized_dicyclic(0, GammaSquare::AHalf).order(), DomainError);
    CHECK_THROWS_AS(build_group(GroupSpec::dicyclic(0)), DomainError);
    CHECK_THROWS_AS(
        build_group(GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::cyclic(0))),
        DomainError);
}

TEST_CASE("dicyclic presentation relations hold") {
    for (long n : {1L, 2L, 3L, 5L, 6L}) {
        CAPTURE(n);
        FiniteGroup g = build_group(GroupSpec::dicyclic(n));
        int a = 2;      // index of a   (i=1, j=0)
        int gamma = 1;  // index of gamma (i=0, j=1)
        CHECK(element_order(g, a) == 2 * n);
        CHECK(element_order(g, gamma) == 4);  // gamma^2 = a^n != e

        int a_n = g.identity;
        for (long k = 0; k < n; ++k) a_n = g.at(a_n, a);
        CHECK(g.at(gamma, gamma) == a_n);  // gamma^2 = a^n

        int conj = g.at(g.at(g.inv[static_cast<std::size_t>(gamma)], a), gamma);
        CHECK(conj == g.inv[static_cast<std::size_t>(a)]);  // a^gamma = a^-1
    }
}

TEST_CASE("generalized quaternion groups are the two-power dicyclic groups") {
    FiniteGroup q8 = build_group(GroupSpec::generalized_quaternion(3));
    FiniteGroup dic8 = build_group(GroupSpec::dicyclic(2));
    CHECK(q8.mul == dic8.mul);  // same table, different labels
    CHECK(q8.labels[2] == "x");
    CHECK(dic8.labels[2] == "a");
    CHECK(is_isomorphic(build_group(GroupSpec::generalized_quaternion(4)),
                        build_group(GroupSpec::dicyclic(4))));
}

TEST_CASE("generalized dicyclic presentation relations hold") {
    for (long n : {2L, 4L, 6L, 8L}) {
        for (GammaSquare choice : {GammaSquare::AHalf, GammaSquare::B, GammaSquare::AHalfB}) {
            CAPTURE(n);
            CAPTURE(gamma_square_token(choice));
            FiniteGroup g = build_group(GroupSpec::generalized_dicyclic(n, choice));
            int gamma = 1;
            int b = static_cast<int>(2 * n);  // (beta=1, alpha=0)

            int gamma2 = g.at(gamma, gamma);
            long z = choice == GammaSquare::AHalf ? n / 2
                     : choice == GammaSquare::B   ? n
                                                  : n + n / 2;
            CHECK(gamma2 == static_cast<int>(2 * z));
            CHECK(gamma2 != g.identity);
            CHECK(element_order(g, gamma) == 4);
            CHECK(element_order(g, b) == 2);

            // gamma inverts every element of A = Z2 x Zn (the even indices).
            int gamma_inv = g.inv[static_cast<std::size_t>(gamma)];
            for (int x = 0; x < g.size; x += 2) {
                int conj = g.at(g.at(gamma_inv, x), gamma);
                CHECK(conj == g.inv[static_cast<std::size_t>(x)]);
            }
        }
    }
}

TEST_CASE("element orders and centers") {
    FiniteGroup dic12 = build_group(GroupSpec::dicyclic(3));
    Subgroup z = center(dic12);
    CHECK(z.order == 2);  // {e, a^3}
    CHECK(z.members.test(0));
    CHECK(z.members.test(6));  // a^3 at index 2*3+0

    FiniteGroup q8 = build_group(GroupSpec::generalized_quaternion(3));
    CHECK(center(q8).order == 2);

    FiniteGroup ab = build_group(GroupSpec::abelian({2, 6}));
    CHECK(center(ab).order == 12);

    CHECK(element_order(dic12, 0) == 1);
    CHECK_THROWS_AS(element_order(dic12, 12), DomainError);
    CHECK_THROWS_AS(multiply(dic12, -1, 0), DomainError);
    CHECK(multiply(dic12, 2, 2) == 4);  // a * a = a^2
}

TEST_CASE("gamma-square tokens round-trip") {
    for (GammaSquare choice : {GammaSquare::AHalf, GammaSquare::B, GammaSquare::AHalfB})
        CHECK(parse_gamma_square(gamma_square_token(choice)) == choice);
    CHECK_THROWS_AS(parse_gamma_square("gamma"), DomainError);
    CHECK(std::string(gamma_square_display(GammaSquare::AHalf)) == "a^(n/2)");
}

TEST_CASE("isomorphism test identifies equal and distinct structures") {
    // Chinese remainder: Z6 = Z2 x Z3.
    CHECK(is_isomorphic(build_group(GroupSpec::cyclic(6)),
                        build_group(GroupSpec::abelian({2, 3}))));
    CHECK_FALSE(is_isomorphic(build_group(GroupSpec::cyclic(4)),
                              build_group(GroupSpec::abelian({2, 2}))));
    CHECK_FALSE(is_isomorphic(build_group(GroupSpec::dihedral(4)),
                              build_group(GroupSpec::generalized_quaternion(3))));
    CHECK_FALSE(is_isomorphic(build_group(GroupSpec::cyclic(6)),
                              build_group(GroupSpec::dihedral(3))));
    // Different orders reject immediately.
    CHECK_FALSE(is_isomorphic(build_group(GroupSpec::cyclic(6)),
                              build_group(GroupSpec::cyclic(8))));
}

TEST_CASE("the order-8 generalized dicyclic group is Z4 x Z2, not Z2^3") {
    FiniteGroup z4z2 = build_group(GroupSpec::abelian({4, 2}));
    FiniteGroup z2cubed = build_group(GroupSpec::abelian({2, 2, 2}));
    for (GammaSquare choice : {GammaSquare::AHalf, GammaSquare::B, GammaSquare::AHalfB}) {
        CAPTURE(gamma_square_token(choice));
        FiniteGroup g = build_group(GroupSpec::generalized_dicyclic(2, choice));
        CHECK(center(g).order == 8);  // abelian
        CHECK(is_isomorphic(g, z4z2));
        CHECK_FALSE(is_isomorphic(g, z2cubed));  // gamma has order 4
    }
}

TEST_CASE("the order-16 generalized dicyclic group with gamma^2 = a^2 is Z2 x Q8") {
    FiniteGroup g = build_group(GroupSpec::generalized_dicyclic(4, GammaSquare::AHalf));
    FiniteGroup z2q8 = build_group(
        GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(3)));
    CHECK(is_isomorphic(g, z2q8));
    CHECK_FALSE(is_isomorphic(g, build_group(GroupSpec::abelian({2, 8}))));
}

TEST_CASE("all_isomorphisms finds automorphism groups of known size") {
    FiniteGroup q8 = build_group(GroupSpec::generalized_quaternion(3));
    auto auts = all_isomorphisms(q8, q8);
    CHECK(auts.size() == 24);  // Aut(Q8) = S4
    for (const auto& phi : auts) {
        REQUIRE(phi.size() == 8);
        CHECK(phi[0] == 0);
        for (int i = 0; i < q8.size; ++i)
            for (int j = 0; j < q8.size; ++j)
                CHECK(phi[static_cast<std::size_t>(q8.at(i, j))] ==
                      q8.at(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]));
    }

    FiniteGroup v4 = build_group(GroupSpec::abelian({2, 2}));
    CHECK(all_isomorphisms(v4, v4).size() == 6);  // GL(2,2)

    CHECK(all_isomorphisms(v4, build_group(GroupSpec::cyclic(4))).empty());
}
