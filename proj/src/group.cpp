#include "grpdeg/group.hpp"

#include "grpdeg/errors.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace grpdeg {

const char* gamma_square_token(GammaSquare g) {
    switch (g) {
        case GammaSquare::AHalf: return "ahalf";
        case GammaSquare::B: return "b";
        case GammaSquare::AHalfB: return "ahalfb";
    }
    throw std::logic_error("unknown gamma-square tag");
}

const char* gamma_square_display(GammaSquare g) {
    switch (g) {
        case GammaSquare::AHalf: return "a^(n/2)";
        case GammaSquare::B: return "b";
        case GammaSquare::AHalfB: return "a^(n/2)b";
    }
    throw std::logic_error("unknown gamma-square tag");
}

GammaSquare parse_gamma_square(const std::string& token) {
    if (token == "ahalf") return GammaSquare::AHalf;
    if (token == "b") return GammaSquare::B;
    if (token == "ahalfb") return GammaSquare::AHalfB;
    throw DomainError("unknown gamma-square token '" + token + "' (expected ahalf, b or ahalfb)");
}

GroupSpec GroupSpec::cyclic(long n) { return GroupSpec{Cyclic{n}}; }

GroupSpec GroupSpec::abelian(std::vector<long> orders) {
    return GroupSpec{AbelianProduct{std::move(orders)}};
}

GroupSpec GroupSpec::dihedral(long n) { return GroupSpec{Dihedral{n}}; }

GroupSpec GroupSpec::dicyclic(long n) { return GroupSpec{Dicyclic{n}}; }

GroupSpec GroupSpec::generalized_quaternion(int m) { return GroupSpec{GeneralizedQuaternion{m}}; }

GroupSpec GroupSpec::generalized_dicyclic(long n, GammaSquare gamma_sq) {
    return GroupSpec{GeneralizedDicyclic{n, gamma_sq}};
}

GroupSpec GroupSpec::direct_product(GroupSpec left, GroupSpec right) {
    return GroupSpec{DirectProduct{std::make_shared<const GroupSpec>(std::move(left)),
                                   std::make_shared<const GroupSpec>(std::move(right))}};
}

namespace {

long pow2_long(int m) {
    if (m < 0 || m > 30) throw DomainError("two-power exponent out of range");
    return 1L << m;
}

}  // namespace

long GroupSpec::order() const {
    return std::visit(
        [](const auto& s) -> long {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                if (s.n < 1) throw DomainError("cyclic group order must be >= 1");
                return s.n;
            } else if constexpr (std::is_same_v<T, AbelianProduct>) {
                if (s.orders.empty()) throw DomainError("abelian product needs at least one factor");
                long total = 1;
                for (long k : s.orders) {
                    if (k < 1) throw DomainError("abelian factor orders must be >= 1");
                    total *= k;
                }
                return total;
            } else if constexpr (std::is_same_v<T, Dihedral>) {
                if (s.n < 1) throw DomainError("dihedral parameter must be >= 1");
                return 2 * s.n;
            } else if constexpr (std::is_same_v<T, Dicyclic>) {
                if (s.n < 1) throw DomainError("dicyclic parameter must be >= 1");
                return 4 * s.n;
            } else if constexpr (std::is_same_v<T, GeneralizedQuaternion>) {
                if (s.m < 3) throw DomainError("generalized quaternion group requires m >= 3");
                return pow2_long(s.m);
            } else if constexpr (std::is_same_v<T, GeneralizedDicyclic>) {
                if (s.n < 2 || s.n % 2 != 0)
                    throw DomainError("generalized dicyclic group requires even n >= 2");
                return 4 * s.n;
            } else {
                static_assert(std::is_same_v<T, DirectProduct>);
                return s.left->order() * s.right->order();
            }
        },
        v);
}

std::string GroupSpec::name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                return "Z" + std::to_string(s.n);
            } else if constexpr (std::is_same_v<T, AbelianProduct>) {
                std::string out;
                for (std::size_t i = 0; i < s.orders.size(); ++i) {
                    if (i) out += "x";
                    out += "Z" + std::to_string(s.orders[i]);
                }
                return out;
            } else if constexpr (std::is_same_v<T, Dihedral>) {
                return "D" + std::to_string(2 * s.n);
            } else if constexpr (std::is_same_v<T, Dicyclic>) {
                return "Dic" + std::to_string(4 * s.n);
            } else if constexpr (std::is_same_v<T, GeneralizedQuaternion>) {
                return "Q" + std::to_string(pow2_long(s.m));
            } else if constexpr (std::is_same_v<T, GeneralizedDicyclic>) {
                return "Dic" + std::to_string(4 * s.n) + "(Z2xZ" + std::to_string(s.n) +
                       ",g2=" + gamma_square_display(s.gamma_sq) + ")";
            } else {
                static_assert(std::is_same_v<T, DirectProduct>);
                return s.left->name() + "x" + s.right->name();
            }
        },
        v);
}

namespace {

std::string power_label(const std::string& base, long k) {
    if (k == 0) return "e";
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

void finish(FiniteGroup& g) {
    g.identity = 0;
    g.inv.assign(static_cast<std::size_t>(g.size), -1);
    for (int i = 0; i < g.size; ++i) {
        for (int j = 0; j < g.size; ++j) {
            if (g.at(i, j) == 0) {
                g.inv[static_cast<std::size_t>(i)] = j;
                break;
            }
        }
        if (g.inv[static_cast<std::size_t>(i)] < 0)
            throw std::logic_error("group table has an element without inverse");
    }
}

FiniteGroup build_cyclic(long n, const GroupSpec& spec) {
    FiniteGroup g;
    g.size = static_cast<int>(n);
    g.spec = spec;
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g.mul[static_cast<std::size_t>(i) * n + j] = static_cast<int>((i + j) % n);
    for (long i = 0; i < n; ++i) g.labels.push_back(power_label("g", i));
    finish(g);
    return g;
}

FiniteGroup build_abelian(const std::vector<long>& orders, const GroupSpec& spec) {
    long total = 1;
    for (long k : orders) total *= k;
    FiniteGroup g;
    g.size = static_cast<int>(total);
    g.spec = spec;

    auto decode = [&](long idx) {
        std::vector<long> t(orders.size());
        for (std::size_t d = orders.size(); d-- > 0;) {
            t[d] = idx % orders[d];
            idx /= orders[d];
        }
        return t;
    };
    auto encode = [&](const std::vector<long>& t) {
        long idx = 0;
        for (std::size_t d = 0; d < orders.size(); ++d) idx = idx * orders[d] + t[d];
        return idx;
    };

    g.mul.resize(static_cast<std::size_t>(total) * total);
    for (long i = 0; i < total; ++i) {
        auto ti = decode(i);
        for (long j = 0; j < total; ++j) {
            auto tj = decode(j);
            std::vector<long> tk(orders.size());
            for (std::size_t d = 0; d < orders.size(); ++d) tk[d] = (ti[d] + tj[d]) % orders[d];
            g.mul[static_cast<std::size_t>(i) * total + j] = static_cast<int>(encode(tk));
        }
    }
    for (long i = 0; i < total; ++i) {
        auto t = decode(i);
        std::string label = "(";
        for (std::size_t d = 0; d < t.size(); ++d) {
            if (d) label += ",";
            label += std::to_string(t[d]);
        }
        label += ")";
        g.labels.push_back(label);
    }
    finish(g);
    return g;
}

// Elements x^i y^j, j in {0,1}, with y x y^-1 = x^-1. Index = 2i + j.
FiniteGroup build_dihedral(long n, const GroupSpec& spec) {
    FiniteGroup g;
    g.size = static_cast<int>(2 * n);
    g.spec = spec;
    auto idx = [n](long i, long j) { return static_cast<int>(2 * i + j); };
    g.mul.resize(static_cast<std::size_t>(g.size) * g.size);
    for (long i1 = 0; i1 < n; ++i1) {
        for (long j1 = 0; j1 < 2; ++j1) {
            for (long i2 = 0; i2 < n; ++i2) {
                for (long j2 = 0; j2 < 2; ++j2) {
                    long i = j1 == 0 ? (i1 + i2) % n : (i1 - i2 + n) % n;
                    long j = (j1 + j2) % 2;
                    g.mul[static_cast<std::size_t>(idx(i1, j1)) * g.size + idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < 2; ++j) {
            std::string label = j == 0 ? power_label("x", i)
                                       : (i == 0 ? "y" : power_label("x", i) + "*y");
            g.labels.push_back(label);
        }
    // labels were pushed in (i,j) row-major order matching idx()
    finish(g);
    return g;
}

// Elements a^i t^j with a of order 2n, t^2 = a^n, t a t^-1 = a^-1.
// Index = 2i + j. Generator letters differ per family (a/g vs x/y).
FiniteGroup build_dicyclic_table(long n, const char* rot, const char* ext, const GroupSpec& spec) {
    FiniteGroup g;
    long two_n = 2 * n;
    g.size = static_cast<int>(4 * n);
    g.spec = spec;
    auto idx = [two_n](long i, long j) { return static_cast<int>(2 * i + j); };
    g.mul.resize(static_cast<std::size_t>(g.size) * g.size);
    for (long i1 = 0; i1 < two_n; ++i1) {
        for (long j1 = 0; j1 < 2; ++j1) {
            for (long i2 = 0; i2 < two_n; ++i2) {
                for (long j2 = 0; j2 < 2; ++j2) {
                    long i, j;
                    if (j1 == 0) {
                        i = (i1 + i2) % two_n;
                        j = j2;
                    } else if (j2 == 0) {
                        i = (i1 - i2 + two_n) % two_n;
                        j = 1;
                    } else {
                        i = (i1 - i2 + n + two_n) % two_n;  // t^2 = a^n
                        j = 0;
                    }
                    g.mul[static_cast<std::size_t>(idx(i1, j1)) * g.size + idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    for (long i = 0; i < two_n; ++i)
        for (long j = 0; j < 2; ++j) {
            std::string label = j == 0 ? power_label(rot, i)
                                       : (i == 0 ? std::string(ext) : power_label(rot, i) + "*" + ext);
            g.labels.push_back(label);
        }
    finish(g);
    return g;
}

// Elements (beta, alpha, j): b^beta a^alpha t^j over A = Z2 x Zn, with
// t g t^-1 = g^-1 for g in A and t^2 = z the chosen square.
// Index = (beta*n + alpha)*2 + j.
FiniteGroup build_generalized_dicyclic(long n, GammaSquare choice, const GroupSpec& spec) {
    FiniteGroup g;
    long a_order = 2 * n;  // |A|
    g.size = static_cast<int>(4 * n);
    g.spec = spec;

    auto a_mul = [n](long x, long y) {
        long bx = x / n, ax = x % n;
        long by = y / n, ay = y % n;
        return ((bx + by) % 2) * n + (ax + ay) % n;
    };
    auto a_inv = [n](long x) {
        long bx = x / n, ax = x % n;
        return bx * n + (n - ax) % n;
    };
    long z = 0;
    switch (choice) {
        case GammaSquare::AHalf: z = n / 2; break;
        case GammaSquare::B: z = n; break;             // (beta=1, alpha=0)
        case GammaSquare::AHalfB: z = n + n / 2; break;
    }

    auto idx = [](long a_idx, long j) { return static_cast<int>(2 * a_idx + j); };
    g.mul.resize(static_cast<std::size_t>(g.size) * g.size);
    for (long x = 0; x < a_order; ++x) {
        for (long j1 = 0; j1 < 2; ++j1) {
            for (long y = 0; y < a_order; ++y) {
                for (long j2 = 0; j2 < 2; ++j2) {
                    long a_idx, j;
                    if (j1 == 0) {
                        a_idx = a_mul(x, y);
                        j = j2;
                    } else if (j2 == 0) {
                        a_idx = a_mul(x, a_inv(y));
                        j = 1;
                    } else {
                        a_idx = a_mul(a_mul(x, a_inv(y)), z);
                        j = 0;
                    }
                    g.mul[static_cast<std::size_t>(idx(x, j1)) * g.size + idx(y, j2)] = idx(a_idx, j);
                }
            }
        }
    }
    for (long x = 0; x < a_order; ++x) {
        long beta = x / n, alpha = x % n;
        for (long j = 0; j < 2; ++j) {
            std::string label;
            if (beta) label += "b";
            if (alpha) {
                if (!label.empty()) label += "*";
                label += power_label("a", alpha);
            }
            if (j) {
                if (!label.empty()) label += "*";
                label += "g";
            }
            if (label.empty()) label = "e";
            g.labels.push_back(label);
        }
    }
    finish(g);
    return g;
}

FiniteGroup build_direct_product(const GroupSpec& left, const GroupSpec& right,
                                 const GroupSpec& spec) {
    FiniteGroup lg = build_group(left);
    FiniteGroup rg = build_group(right);
    FiniteGroup g;
    g.size = lg.size * rg.size;
    g.spec = spec;
    g.mul.resize(static_cast<std::size_t>(g.size) * g.size);
    auto idx = [&](int li, int ri) { return li * rg.size + ri; };
    for (int l1 = 0; l1 < lg.size; ++l1)
        for (int r1 = 0; r1 < rg.size; ++r1)
            for (int l2 = 0; l2 < lg.size; ++l2)
                for (int r2 = 0; r2 < rg.size; ++r2)
                    g.mul[static_cast<std::size_t>(idx(l1, r1)) * g.size + idx(l2, r2)] =
                        idx(lg.at(l1, l2), rg.at(r1, r2));
    for (int l = 0; l < lg.size; ++l)
        for (int r = 0; r < rg.size; ++r)
            g.labels.push_back("(" + lg.labels[static_cast<std::size_t>(l)] + "," +
                               rg.labels[static_cast<std::size_t>(r)] + ")");
    finish(g);
    return g;
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
    spec.order();  // validate parameters up front
    return std::visit(
        [&](const auto& s) -> FiniteGroup {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
                return build_cyclic(s.n, spec);
            } else if constexpr (std::is_same_v<T, GroupSpec::AbelianProduct>) {
                return build_abelian(s.orders, spec);
            } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
                return build_dihedral(s.n, spec);
            } else if constexpr (std::is_same_v<T, GroupSpec::Dicyclic>) {
                return build_dicyclic_table(s.n, "a", "g", spec);
            } else if constexpr (std::is_same_v<T, GroupSpec::GeneralizedQuaternion>) {
                return build_dicyclic_table(pow2_long(s.m - 2), "x", "y", spec);
            } else if constexpr (std::is_same_v<T, GroupSpec::GeneralizedDicyclic>) {
                return build_generalized_dicyclic(s.n, s.gamma_sq, spec);
            } else {
                static_assert(std::is_same_v<T, GroupSpec::DirectProduct>);
                return build_direct_product(*s.left, *s.right, spec);
            }
        },
        spec.v);
}

int multiply(const FiniteGroup& g, int i, int j) {
    if (i < 0 || i >= g.size || j < 0 || j >= g.size)
        throw DomainError("multiply: element index out of range");
    return g.at(i, j);
}

int element_order(const FiniteGroup& g, int i) {
    if (i < 0 || i >= g.size) throw DomainError("element_order: element index out of range");
    int order = 1;
    int acc = i;
    while (acc != g.identity) {
        acc = g.at(acc, i);
        ++order;
    }
    return order;
}

Subgroup center(const FiniteGroup& g) {
    Subgroup z;
    z.members = ElementSet(g.size);
    for (int i = 0; i < g.size; ++i) {
        bool central = true;
        for (int j = 0; j < g.size; ++j) {
            if (g.at(i, j) != g.at(j, i)) {
                central = false;
                break;
            }
        }
        if (central) z.members.set(i);
    }
    z.order = z.members.count();
    return z;
}

}  // namespace grpdeg
