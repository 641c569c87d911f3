#include "doctest.h"

#include <cstdint>
#include <numeric>

#include "grpdeg/arith.hpp"
#include "grpdeg/errors.hpp"

using namespace grpdeg;

TEST_CASE("factorize produces sorted prime powers") {
    CHECK(factorize(1).empty());

    auto f12 = factorize(12);
    REQUIRE(f12.size() == 2);
    CHECK(f12[0].p == 2);
    CHECK(f12[0].alpha == 2);
    CHECK(f12[1].p == 3);
    CHECK(f12[1].alpha == 1);

    auto f97 = factorize(97);
    REQUIRE(f97.size() == 1);
    CHECK(f97[0].p == 97);
    CHECK(f97[0].alpha == 1);

    auto f360 = factorize(360);
    REQUIRE(f360.size() == 3);
    CHECK(f360[0].p == 2);
    CHECK(f360[0].alpha == 3);
    CHECK(f360[1].p == 3);
    CHECK(f360[1].alpha == 2);
    CHECK(f360[2].p == 5);
    CHECK(f360[2].alpha == 1);

    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("divisors are sorted and complete") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
}

TEST_CASE("tau and sigma agree with the divisor list") {
    CHECK(tau(1) == 1);
    CHECK(tau(6) == 4);
    CHECK(tau(12) == 6);
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(12) == 28);

    for (std::uint64_t n = 1; n <= 300; ++n) {
        auto divs = divisors(n);
        CHECK(tau(n) == divs.size());
        CHECK(sigma(n) == std::accumulate(divs.begin(), divs.end(), std::uint64_t{0}));
    }
}

TEST_CASE("two_adic_split separates the 2-part") {
    auto s48 = two_adic_split(48);
    CHECK(s48.m == 4);
    CHECK(s48.m_odd == 3);
    CHECK(s48.n == 48);
    REQUIRE(s48.odd_factors.size() == 1);
    CHECK(s48.odd_factors[0].p == 3);

    auto s1 = two_adic_split(1);
    CHECK(s1.m == 0);
    CHECK(s1.m_odd == 1);
    CHECK(s1.odd_factors.empty());

    auto s15 = two_adic_split(15);
    CHECK(s15.m == 0);
    CHECK(s15.m_odd == 15);

    CHECK_THROWS_AS(two_adic_split(0), DomainError);
}

TEST_CASE("dicyclic_pair_weight reference values") {
    CHECK(dicyclic_pair_weight(1) == 1);
    CHECK(dicyclic_pair_weight(3) == 10);
    CHECK(dicyclic_pair_weight(5) == 16);
    CHECK(dicyclic_pair_weight(9) == 55);
    CHECK(dicyclic_pair_weight(15) == 160);
    CHECK_THROWS_AS(dicyclic_pair_weight(6), DomainError);
}

TEST_CASE("dicyclic_pair_weight is multiplicative over coprime parts") {
    CHECK(dicyclic_pair_weight(15) == dicyclic_pair_weight(3) * dicyclic_pair_weight(5));
    CHECK(dicyclic_pair_weight(21) == dicyclic_pair_weight(3) * dicyclic_pair_weight(7));
    CHECK(dicyclic_pair_weight(45) == dicyclic_pair_weight(9) * dicyclic_pair_weight(5));
    CHECK(dicyclic_pair_weight(105) ==
          dicyclic_pair_weight(3) * dicyclic_pair_weight(5) * dicyclic_pair_weight(7));
}
