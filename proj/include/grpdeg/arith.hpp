#pragma once

#include "grpdeg/rational.hpp"

#include <cstdint>
#include <vector>

namespace grpdeg {

struct PrimePower {
    std::uint64_t p;
    unsigned alpha;
};

/// n = 2^m * m_odd with m_odd odd, plus the prime factorization of m_odd.
struct TwoAdicSplit {
    std::uint64_t n;
    unsigned m;
    std::uint64_t m_odd;
    std::vector<PrimePower> odd_factors;
};

std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Number of divisors of n. Requires n >= 1.
std::uint64_t tau(std::uint64_t n);

/// Sum of divisors of n. Requires n >= 1 (overflow-safe for n well below 2^57).
std::uint64_t sigma(std::uint64_t n);

TwoAdicSplit two_adic_split(std::uint64_t n);

/// Multiplicative weight of an odd integer entering the dicyclic pair-count
/// numerators: per prime power p^a the factor is
/// ((2a+1)p^{a+2} - (2a+3)p^{a+1} + p + 1) / (p-1)^2, which is always an
/// integer (non-divisibility is a hard internal error). Rejects even input.
BigInt dicyclic_pair_weight(std::uint64_t m_odd);

}  // namespace grpdeg
