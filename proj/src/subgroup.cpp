#include "grpdeg/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "grpdeg/errors.hpp"

namespace grpdeg {

std::size_t SubgroupLattice::cyclic_count() const {
    std::size_t n = 0;
    for (bool c : cyclic) n += c ? 1 : 0;
    return n;
}

std::vector<std::size_t> SubgroupLattice::cyclic_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cyclic.size(); ++i)
        if (cyclic[i]) out.push_back(i);
    return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
    ElementSet members(g.size);
    members.set(g.identity);
    std::deque<int> frontier{g.identity};
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop_front();
        for (int s : generators) {
            if (s < 0 || s >= g.size) throw DomainError("generator index out of range");
            int y = g.at(x, s);
            if (!members.test(y)) {
                members.set(y);
                frontier.push_back(y);
            }
        }
    }
    return Subgroup{members, members.count()};
}

std::vector<Subgroup> enumerate_cyclic_subgroups(const FiniteGroup& g) {
    std::vector<Subgroup> out;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    for (int i = 0; i < g.size; ++i) {
        Subgroup h = generated_subgroup(g, {i});
        auto& bucket = seen[h.members.hash()];
        bool dup = false;
        for (std::size_t idx : bucket) {
            if (out[idx].members == h.members) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            bucket.push_back(out.size());
            out.push_back(std::move(h));
        }
    }
    return out;
}

std::vector<int> generating_set(const FiniteGroup& g, const Subgroup& h) {
    if (h.order == 1) return {};
    int first = -1, best_order = 0;
    h.members.for_each([&](int x) {
        int o = element_order(g, x);
        if (o > best_order) {
            best_order = o;
            first = x;
        }
    });
    std::vector<int> gens{first};
    ElementSet span = generated_subgroup(g, gens).members;
    while (span != h.members) {
        int next = -1;
        h.members.for_each([&](int x) {
            if (next < 0 && !span.test(x)) next = x;
        });
        gens.push_back(next);
        span = generated_subgroup(g, gens).members;
    }
    return gens;
}

namespace {

// Smallest subgroup containing both H and K: close their union under
// products.  Starting the BFS from every element of the union keeps the
// closure a single pass.
ElementSet join(const FiniteGroup& g, const ElementSet& h, const ElementSet& k) {
    ElementSet members = h | k;
    std::vector<int> base = members.members();
    std::deque<int> frontier(base.begin(), base.end());
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop_front();
        for (int s : base) {
            int y = g.at(x, s);
            if (!members.test(y)) {
                members.set(y);
                frontier.push_back(y);
            }
        }
    }
    return members;
}

}  // namespace

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, long order_bound) {
    if (g.size > order_bound)
        throw BoundExceeded("group order " + std::to_string(g.size) + " exceeds bound " +
                            std::to_string(order_bound));
    std::vector<Subgroup> found = enumerate_cyclic_subgroups(g);
    std::vector<bool> is_cyclic(found.size(), true);

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < found.size(); ++i) seen[found[i].members.hash()].push_back(i);

    auto add = [&](ElementSet members) -> bool {
        auto& bucket = seen[members.hash()];
        for (std::size_t idx : bucket)
            if (found[idx].members == members) return false;
        bucket.push_back(found.size());
        int order = members.count();
        found.push_back(Subgroup{std::move(members), order});
        is_cyclic.push_back(false);
        return true;
    };

    // Close under pairwise joins.  New subgroups extend `found`, so the outer
    // loop naturally picks them up until a full pass adds nothing.
    for (std::size_t i = 1; i < found.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const ElementSet& a = found[i].members;
            const ElementSet& b = found[j].members;
            if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
            add(join(g, a, b));
        }
    }

    SubgroupLattice lat;
    lat.group = &g;

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (found[a].order != found[b].order) return found[a].order < found[b].order;
        return found[a].members.set_less(found[b].members);
    });
    for (std::size_t i : order) {
        lat.subgroups.push_back(std::move(found[i]));
        lat.cyclic.push_back(is_cyclic[i]);
    }
    return lat;
}

ElementSet product_set(const FiniteGroup& g, const ElementSet& h, const ElementSet& k) {
    ElementSet out(g.size);
    h.for_each([&](int x) { k.for_each([&](int y) { out.set(g.at(x, y)); }); });
    return out;
}

bool permutes(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    if (h.members.is_subset_of(k.members) || k.members.is_subset_of(h.members)) return true;
    ElementSet p = product_set(g, h.members, k.members);
    // HK = KH iff HK is a subgroup, and since HK absorbs H and K on either
    // side and (HK)^-1 = KH, closure under inverses is the whole test.
    bool ok = true;
    p.for_each([&](int x) {
        if (!p.test(g.inv[static_cast<std::size_t>(x)])) ok = false;
    });
    return ok;
}

std::size_t permuter_count(const FiniteGroup& g, const SubgroupLattice& lat, const Subgroup& h,
                           bool cyclic_only) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (cyclic_only && !lat.cyclic[i]) continue;
        if (permutes(g, h, lat.subgroups[i])) ++n;
    }
    return n;
}

namespace {

Degree degree_over(const FiniteGroup& g, const std::vector<const Subgroup*>& members) {
    BigInt permuting = 0;
    std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i) {
        ++permuting;  // (H, H) always permutes
        for (std::size_t j = 0; j < i; ++j)
            if (permutes(g, *members[i], *members[j])) permuting += 2;
    }
    BigInt total = BigInt(n) * BigInt(n);
    return Degree(permuting, total);
}

}  // namespace

Degree sd_bruteforce(const FiniteGroup& g, const SubgroupLattice& lat) {
    std::vector<const Subgroup*> all;
    for (const Subgroup& h : lat.subgroups) all.push_back(&h);
    return degree_over(g, all);
}

Degree csd_bruteforce(const FiniteGroup& g, const SubgroupLattice& lat) {
    std::vector<const Subgroup*> cyc;
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (lat.cyclic[i]) cyc.push_back(&lat.subgroups[i]);
    return degree_over(g, cyc);
}

}  // namespace grpdeg
