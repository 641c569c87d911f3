#include "grpdeg/arith.hpp"

#include "grpdeg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace grpdeg {

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: argument must be positive");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned a = 0;
            while (n % p == 0) {
                n /= p;
                ++a;
            }
            out.push_back({p, a});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, alpha] : factorize(n)) {
        std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= alpha; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t tau(std::uint64_t n) {
    std::uint64_t t = 1;
    for (const auto& [p, alpha] : factorize(n)) t *= alpha + 1;
    return t;
}

std::uint64_t sigma(std::uint64_t n) {
    std::uint64_t s = 1;
    for (const auto& [p, alpha] : factorize(n)) {
        std::uint64_t term = 1, pk = 1;
        for (unsigned k = 1; k <= alpha; ++k) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

TwoAdicSplit two_adic_split(std::uint64_t n) {
    if (n == 0) throw DomainError("two_adic_split: argument must be positive");
    TwoAdicSplit split;
    split.n = n;
    split.m = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++split.m;
    }
    split.m_odd = n;
    split.odd_factors = factorize(n);
    return split;
}

BigInt dicyclic_pair_weight(std::uint64_t m_odd) {
    if (m_odd % 2 == 0) throw DomainError("dicyclic_pair_weight: argument must be odd");
    BigInt product = 1;
    for (const auto& [p, alpha] : factorize(m_odd)) {
        BigInt bp = p;
        BigInt p_a1 = boost::multiprecision::pow(bp, alpha + 1);
        BigInt numer = BigInt(2 * alpha + 1) * p_a1 * bp - BigInt(2 * alpha + 3) * p_a1 + bp + 1;
        BigInt denom = (bp - 1) * (bp - 1);
        if (numer % denom != 0) {
            throw std::logic_error("dicyclic_pair_weight: per-prime factor is not an integer");
        }
        product *= numer / denom;
    }
    return product;
}

}  // namespace grpdeg
