#include "grpdeg/rational.hpp"

#include "grpdeg/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace grpdeg {

Degree::Degree(BigInt num, BigInt den) : raw_num_(num), raw_den_(den) {
    if (den <= 0) throw DomainError("degree denominator must be positive");
    if (num <= 0) throw DomainError("degree numerator must be positive");
    if (num > den) throw DomainError("degree value must lie in (0, 1]");
    BigInt g = boost::multiprecision::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Degree Degree::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Degree(BigInt(std::string(text)), 1);
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    return Degree(num, den);
}

std::string Degree::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string Degree::raw_str() const {
    if (raw_den_ == 1) return raw_num_.str();
    return raw_num_.str() + "/" + raw_den_.str();
}

std::string Degree::decimal(int digits) const {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half up: floor((num*scale*2 + den) / (2*den))
    BigInt scaled = (num_ * scale * 2 + den_) / (den_ * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string f = frac.str();
    if (static_cast<int>(f.size()) < digits) f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    return whole.str() + "." + f;
}

}  // namespace grpdeg
