#include "grpdeg/formulas.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "grpdeg/errors.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

namespace {

using boost::multiprecision::pow;

BigInt pow2(unsigned e) { return pow(BigInt(2), e); }

std::uint64_t checked_u64(long n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + " must be >= 1");
    return static_cast<std::uint64_t>(n);
}

// (m-1) 2^{m+3} + 9, the dihedral-pair count entering both sd expressions.
// At m = 0 it degenerates to 1, which is exactly what odd n needs.
BigInt twisted_pair_count(unsigned m) {
    return (BigInt(m) - 1) * pow2(m + 3) + 9;
}

}  // namespace

BigInt lattice_size_dicyclic(long n) {
    std::uint64_t u = checked_u64(n, "dicyclic parameter");
    return BigInt(tau(2 * u)) + BigInt(sigma(u));
}

BigInt cyclic_poset_size_dicyclic(long n) {
    std::uint64_t u = checked_u64(n, "dicyclic parameter");
    return BigInt(tau(2 * u)) + BigInt(u);
}

BigInt subgroup_count_z2_dihedral(int m) {
    if (m < 1) throw DomainError("z2-dihedral subgroup count requires m >= 1");
    std::uint64_t np = std::uint64_t{1} << (m - 1);
    return BigInt(5) * sigma(np) + BigInt(3) * tau(np) - BigInt(2) * np - 1;
}

BigInt subgroup_count_z2_quaternion(int m) {
    if (m < 2) throw DomainError("z2-quaternion subgroup count requires m >= 2");
    return pow2(static_cast<unsigned>(m) + 2) + BigInt(3) * (m - 1);
}

BigInt subgroup_count_z2_quaternion_general(int m) {
    if (m < 2) throw DomainError("z2-quaternion subgroup count requires m >= 2");
    std::uint64_t np = std::uint64_t{1} << (m - 1);
    return BigInt(5) * sigma(np) + BigInt(3) * tau(np) - BigInt(2) * np + 2;
}

BigInt subgroup_count_z2xzn(long n) {
    checked_u64(n, "abelian parameter");
    FiniteGroup a = build_group(GroupSpec::abelian({2, n}));
    return BigInt(enumerate_subgroups(a).size());
}

BigInt cyclic_count_z2xzn(long n) {
    checked_u64(n, "abelian parameter");
    FiniteGroup a = build_group(GroupSpec::abelian({2, n}));
    return BigInt(enumerate_cyclic_subgroups(a).size());
}

Degree sd_dicyclic(long n) {
    std::uint64_t u = checked_u64(n, "dicyclic parameter");
    TwoAdicSplit s = two_adic_split(u);
    BigInt t = tau(s.m_odd);
    BigInt sig = sigma(u);
    BigInt head = BigInt(s.m + 2) * t;  // = tau(2n)
    BigInt num = head * head + 2 * head * sig + twisted_pair_count(s.m) * dicyclic_pair_weight(s.m_odd);
    BigInt den = head + sig;
    return Degree(num, den * den);
}

Degree csd_dicyclic(long n) {
    std::uint64_t u = checked_u64(n, "dicyclic parameter");
    BigInt t = tau(2 * u);
    BigInt extra = (u % 2 == 1) ? 1 : 2;
    BigInt num = t * (t + u) + BigInt(u) * (t + extra);
    BigInt den = t + u;
    return Degree(num, den * den);
}

Degree sd_z2_quaternion(int m) {
    if (m < 2) throw DomainError("z2-quaternion degree requires m >= 2");
    unsigned um = static_cast<unsigned>(m);
    BigInt num = pow2(um + 2) * (BigInt(24) * m - 37) + BigInt(9) * m * m - BigInt(18) * m + 185;
    BigInt den = pow2(um + 2) + BigInt(3) * (m - 1);
    return Degree(num, den * den);
}

Degree csd_z2_quaternion(int m) {
    if (m < 2) throw DomainError("z2-quaternion degree requires m >= 2");
    unsigned um = static_cast<unsigned>(m);
    BigInt cyc = BigInt(2) * m + 2;  // cyclic subgroups of Z2 x Z_{2^m}
    BigInt num = pow2(um) * (BigInt(4) * m + 8) + cyc * cyc;
    BigInt den = pow2(um) + cyc;
    return Degree(num, den * den);
}

namespace {

enum class GenDicyclicCase { Abelian, TwoPower, General };

GenDicyclicCase classify(long n, GammaSquare choice, bool allow_extrapolated,
                         TwoAdicSplit& split) {
    if (n < 2 || n % 2 != 0) throw DomainError("generalized dicyclic group requires even n >= 2");
    split = two_adic_split(static_cast<std::uint64_t>(n));
    if (n == 2) return GenDicyclicCase::Abelian;
    if (split.m_odd == 1 && split.m >= 2 && choice == GammaSquare::AHalf)
        return GenDicyclicCase::TwoPower;
    if (split.m == 1 && split.m_odd != 1 && !allow_extrapolated)
        throw DomainError(
            "closed form for n = 2 mod 4 (n > 2) lies outside the established domain; "
            "pass allow_extrapolated to evaluate it anyway");
    return GenDicyclicCase::General;
}

}  // namespace

Degree sd_gen_dicyclic(long n, GammaSquare choice, bool allow_extrapolated) {
    TwoAdicSplit s;
    switch (classify(n, choice, allow_extrapolated, s)) {
        case GenDicyclicCase::Abelian: return Degree(1, 1);
        case GenDicyclicCase::TwoPower: return sd_z2_quaternion(static_cast<int>(s.m));
        case GenDicyclicCase::General: break;
    }
    BigInt la = subgroup_count_z2xzn(n);
    BigInt sig = sigma(s.n);
    BigInt num = la * la + 2 * la * sig + twisted_pair_count(s.m) * dicyclic_pair_weight(s.m_odd);
    BigInt den = la + sig;
    return Degree(num, den * den);
}

Degree csd_gen_dicyclic(long n, GammaSquare choice, bool allow_extrapolated) {
    TwoAdicSplit s;
    switch (classify(n, choice, allow_extrapolated, s)) {
        case GenDicyclicCase::Abelian: return Degree(1, 1);
        case GenDicyclicCase::TwoPower: return csd_z2_quaternion(static_cast<int>(s.m));
        case GenDicyclicCase::General: break;
    }
    BigInt l1 = cyclic_count_z2xzn(n);
    BigInt num = l1 * (l1 + n) + BigInt(n) * (l1 + 2);
    BigInt den = l1 + n;
    return Degree(num, den * den);
}

}  // namespace grpdeg
