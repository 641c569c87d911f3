#include "grpdeg/goursat.hpp"

#include <algorithm>

#include "grpdeg/errors.hpp"
#include "grpdeg/iso.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

namespace {

bool is_normal_in(const FiniteGroup& g, const ElementSet& n, const ElementSet& h) {
    bool ok = true;
    h.for_each([&](int x) {
        int xi = g.inv[static_cast<std::size_t>(x)];
        n.for_each([&](int y) {
            if (!n.test(g.at(g.at(x, y), xi))) ok = false;
        });
    });
    return ok;
}

struct Quotient {
    FiniteGroup table;          // cosets of N in H; identity coset is index 0
    std::vector<int> coset_of;  // parent element -> coset index, -1 outside H
};

// Requires N normal in H.  Identity has the smallest element index, so the
// first coset assigned is N itself and the quotient identity lands at 0.
Quotient make_quotient(const FiniteGroup& g, const ElementSet& h, const ElementSet& n) {
    Quotient q;
    q.coset_of.assign(static_cast<std::size_t>(g.size), -1);
    std::vector<int> reps;
    h.for_each([&](int x) {
        if (q.coset_of[static_cast<std::size_t>(x)] >= 0) return;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        n.for_each([&](int y) { q.coset_of[static_cast<std::size_t>(g.at(x, y))] = c; });
    });

    FiniteGroup& t = q.table;
    t.size = static_cast<int>(reps.size());
    t.mul.resize(static_cast<std::size_t>(t.size) * t.size);
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j)
            t.mul[static_cast<std::size_t>(i) * t.size + j] =
                q.coset_of[static_cast<std::size_t>(g.at(reps[static_cast<std::size_t>(i)],
                                                          reps[static_cast<std::size_t>(j)]))];
    t.identity = 0;
    t.inv.assign(static_cast<std::size_t>(t.size), -1);
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j)
            if (t.at(i, j) == 0) {
                t.inv[static_cast<std::size_t>(i)] = j;
                break;
            }
    for (int i = 0; i < t.size; ++i)
        t.labels.push_back(g.labels[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] +
                           "N");
    // spec left defaulted: the table only feeds the isomorphism search
    return q;
}

struct Section {
    const Subgroup* outer;
    const Subgroup* inner;
    Quotient quotient;
};

std::vector<Section> sections(const FiniteGroup& g, const SubgroupLattice& lat) {
    std::vector<Section> out;
    for (const Subgroup& h : lat.subgroups) {
        for (const Subgroup& n : lat.subgroups) {
            if (!n.members.is_subset_of(h.members)) continue;
            if (!is_normal_in(g, n.members, h.members)) continue;
            out.push_back(Section{&h, &n, make_quotient(g, h.members, n.members)});
        }
    }
    return out;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups_goursat(const FiniteGroup& a, const FiniteGroup& b,
                                                  long order_bound) {
    if (static_cast<long>(a.size) * b.size > order_bound)
        throw BoundExceeded("product order " + std::to_string(static_cast<long>(a.size) * b.size) +
                            " exceeds bound " + std::to_string(order_bound));
    SubgroupLattice lat_a = enumerate_subgroups(a, order_bound);
    SubgroupLattice lat_b = enumerate_subgroups(b, order_bound);
    std::vector<Section> secs_a = sections(a, lat_a);
    std::vector<Section> secs_b = sections(b, lat_b);

    int product_size = a.size * b.size;
    std::vector<Subgroup> out;
    for (const Section& sa : secs_a) {
        for (const Section& sb : secs_b) {
            if (sa.quotient.table.size != sb.quotient.table.size) continue;
            for (const std::vector<int>& phi :
                 all_isomorphisms(sa.quotient.table, sb.quotient.table)) {
                ElementSet members(product_size);
                sa.outer->members.for_each([&](int x) {
                    int image_coset = phi[static_cast<std::size_t>(
                        sa.quotient.coset_of[static_cast<std::size_t>(x)])];
                    sb.outer->members.for_each([&](int y) {
                        if (sb.quotient.coset_of[static_cast<std::size_t>(y)] == image_coset)
                            members.set(x * b.size + y);
                    });
                });
                out.push_back(Subgroup{std::move(members), 0});
            }
        }
    }
    for (Subgroup& s : out) s.order = s.members.count();
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.members.set_less(y.members);
    });
    return out;
}

}  // namespace grpdeg
