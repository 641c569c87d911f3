#pragma once

#include "grpdeg/elemset.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace grpdeg {

/// The admissible squares of the extending generator in a generalized
/// dicyclic group over Z2 x Zn (written with a generating Zn and b the
/// involution of the Z2 factor): a^{n/2}, b, or a^{n/2} b.
enum class GammaSquare { AHalf, B, AHalfB };

const char* gamma_square_token(GammaSquare g);   // "ahalf" / "b" / "ahalfb"
const char* gamma_square_display(GammaSquare g); // "a^(n/2)" / "b" / "a^(n/2)b"
GammaSquare parse_gamma_square(const std::string& token);  // inverse of gamma_square_token

/// Declarative description of a concrete finite group.
struct GroupSpec {
    struct Cyclic {
        long n;
    };
    struct AbelianProduct {
        std::vector<long> orders;
    };
    struct Dihedral {
        long n;  // group order 2n
    };
    struct Dicyclic {
        long n;  // group order 4n
    };
    struct GeneralizedQuaternion {
        int m;  // group order 2^m, m >= 3
    };
    struct GeneralizedDicyclic {
        long n;  // group order 4n, n even
        GammaSquare gamma_sq;
    };
    struct DirectProduct {
        std::shared_ptr<const GroupSpec> left;
        std::shared_ptr<const GroupSpec> right;
    };

    using Variant = std::variant<Cyclic, AbelianProduct, Dihedral, Dicyclic,
                                 GeneralizedQuaternion, GeneralizedDicyclic, DirectProduct>;
    Variant v;

    static GroupSpec cyclic(long n);
    static GroupSpec abelian(std::vector<long> orders);
    static GroupSpec dihedral(long n);
    static GroupSpec dicyclic(long n);
    static GroupSpec generalized_quaternion(int m);
    static GroupSpec generalized_dicyclic(long n, GammaSquare gamma_sq);
    static GroupSpec direct_product(GroupSpec left, GroupSpec right);

    /// Group order implied by the parameters (validates them).
    long order() const;

    /// Short display name: "Dic12", "Z2xQ16", "Z2xZ6", ...
    std::string name() const;
};

/// Concrete finite group as a full multiplication table over dense element
/// indices 0..size-1. Index 0 is always the identity. Immutable once built.
struct FiniteGroup {
    int size = 0;
    std::vector<int> mul;  // row-major size*size table of element indices
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> labels;
    GroupSpec spec;

    int at(int i, int j) const { return mul[static_cast<std::size_t>(i) * size + j]; }
};

/// Canonical subgroup value: member set plus cached cardinality.
struct Subgroup {
    ElementSet members;
    int order = 0;

    bool operator==(const Subgroup& o) const { return members == o.members; }
};

/// Builds the multiplication table realizing the spec's presentation.
/// Throws DomainError on invalid parameters (nonpositive orders, odd n for
/// a generalized dicyclic group, m < 3 for a generalized quaternion group).
FiniteGroup build_group(const GroupSpec& spec);

/// Bounds-checked table lookup.
int multiply(const FiniteGroup& g, int i, int j);

/// Least k >= 1 with i^k = identity.
int element_order(const FiniteGroup& g, int i);

/// Elements commuting with all of g.
Subgroup center(const FiniteGroup& g);

}  // namespace grpdeg
