#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace grpdeg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in (0, 1]. Keeps the numerator/denominator as constructed
/// (the "raw" form, e.g. 224/256) alongside the gcd-reduced form; equality
/// and ordering compare reduced values. No floating point is involved in
/// construction or comparison; decimal() is a display-only rounding.
class Degree {
public:
    Degree() : Degree(1, 1) {}

    /// Throws DomainError unless 0 < num <= den.
    Degree(BigInt num, BigInt den);

    /// Parses "29/32", "224/256" or "1".
    static Degree parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    const BigInt& raw_num() const { return raw_num_; }
    const BigInt& raw_den() const { return raw_den_; }

    bool operator==(const Degree& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Degree& o) const { return !(*this == o); }
    bool operator<(const Degree& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Degree& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Degree& o) const { return o < *this; }
    bool operator>=(const Degree& o) const { return o <= *this; }

    bool is_one() const { return num_ == 1 && den_ == 1; }

    /// Reduced form: "29/32", or "1" when the value is 1.
    std::string str() const;

    /// As-constructed form: "224/256" (or "1" if constructed as 1/1).
    std::string raw_str() const;

    /// Half-up rounded decimal with the given number of digits: "0.906250".
    std::string decimal(int digits = 6) const;

private:
    BigInt raw_num_, raw_den_;
    BigInt num_, den_;
};

}  // namespace grpdeg
