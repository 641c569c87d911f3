#include "grpdeg/iso.hpp"

#include <algorithm>

namespace grpdeg {

namespace {

// How element x of the source group was first reached: either it was picked
// as generator #gen, or it equals discovery[left] * discovery[right] with
// both factors appearing strictly earlier in discovery order.  Replaying the
// discovery order therefore determines every image from the generator images
// alone.
struct Derivation {
    int gen = -1;
    int left = -1;
    int right = -1;
};

struct SearchState {
    const FiniteGroup& a;
    const FiniteGroup& b;
    std::vector<int> discovery;        // elements of a in derivation order
    std::vector<Derivation> deriv;     // indexed by element of a
    std::vector<int> order_a;
    std::vector<int> order_b;
    std::vector<int> images;           // element of a -> element of b, -1 unset
    std::vector<char> used;            // image already taken in b
    bool find_all = false;
    std::vector<std::vector<int>> found;

    SearchState(const FiniteGroup& a_, const FiniteGroup& b_) : a(a_), b(b_) {}

    bool verify() const {
        for (int i = 0; i < a.size; ++i)
            for (int j = 0; j < a.size; ++j)
                if (images[static_cast<std::size_t>(a.at(i, j))] !=
                    b.at(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]))
                    return false;
        return true;
    }

    // Returns true once a match was found and the search may stop.
    bool extend(std::size_t t) {
        if (t == discovery.size()) {
            if (!verify()) return false;
            found.push_back(images);
            return !find_all;
        }
        int x = discovery[t];
        const Derivation& d = deriv[static_cast<std::size_t>(x)];
        if (d.gen >= 0) {
            for (int y = 0; y < b.size; ++y) {
                if (used[static_cast<std::size_t>(y)]) continue;
                if (order_b[static_cast<std::size_t>(y)] != order_a[static_cast<std::size_t>(x)])
                    continue;
                if (place(x, y, t)) return true;
            }
            return false;
        }
        int y = b.at(images[static_cast<std::size_t>(d.left)],
                     images[static_cast<std::size_t>(d.right)]);
        if (used[static_cast<std::size_t>(y)]) return false;
        if (order_b[static_cast<std::size_t>(y)] != order_a[static_cast<std::size_t>(x)])
            return false;
        return place(x, y, t);
    }

    bool place(int x, int y, std::size_t t) {
        images[static_cast<std::size_t>(x)] = y;
        used[static_cast<std::size_t>(y)] = 1;
        bool done = extend(t + 1);
        used[static_cast<std::size_t>(y)] = 0;
        images[static_cast<std::size_t>(x)] = -1;
        return done;
    }
};

std::vector<std::vector<int>> search(const FiniteGroup& a, const FiniteGroup& b, bool find_all) {
    if (a.size != b.size) return {};

    SearchState st(a, b);
    st.find_all = find_all;
    st.order_a.resize(static_cast<std::size_t>(a.size));
    st.order_b.resize(static_cast<std::size_t>(b.size));
    for (int i = 0; i < a.size; ++i) st.order_a[static_cast<std::size_t>(i)] = element_order(a, i);
    for (int i = 0; i < b.size; ++i) st.order_b[static_cast<std::size_t>(i)] = element_order(b, i);

    {
        std::vector<int> sa = st.order_a, sb = st.order_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return {};
    }

    std::size_t n = static_cast<std::size_t>(a.size);
    st.deriv.assign(n, Derivation{});
    std::vector<char> known(n, 0);
    known[static_cast<std::size_t>(a.identity)] = 1;
    st.discovery.push_back(a.identity);
    int gen_count = 0;
    while (st.discovery.size() < n) {
        int g = -1;
        for (int x = 0; x < a.size; ++x)
            if (!known[static_cast<std::size_t>(x)]) {
                g = x;
                break;
            }
        st.deriv[static_cast<std::size_t>(g)].gen = gen_count++;
        known[static_cast<std::size_t>(g)] = 1;
        std::size_t start = st.discovery.size();
        st.discovery.push_back(g);
        // Close under multiplication; every product references factors that
        // are already in discovery, so derivations replay cleanly.
        for (std::size_t wi = start; wi < st.discovery.size(); ++wi) {
            int w = st.discovery[wi];
            for (std::size_t ui = 0; ui < st.discovery.size(); ++ui) {
                int u = st.discovery[ui];
                int uw = a.at(u, w);
                if (!known[static_cast<std::size_t>(uw)]) {
                    known[static_cast<std::size_t>(uw)] = 1;
                    st.deriv[static_cast<std::size_t>(uw)] = Derivation{-1, u, w};
                    st.discovery.push_back(uw);
                }
                int wu = a.at(w, u);
                if (!known[static_cast<std::size_t>(wu)]) {
                    known[static_cast<std::size_t>(wu)] = 1;
                    st.deriv[static_cast<std::size_t>(wu)] = Derivation{-1, w, u};
                    st.discovery.push_back(wu);
                }
            }
        }
    }

    st.images.assign(n, -1);
    st.used.assign(n, 0);
    st.images[static_cast<std::size_t>(a.identity)] = b.identity;
    st.used[static_cast<std::size_t>(b.identity)] = 1;
    st.extend(1);
    return std::move(st.found);
}

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    return !search(a, b, false).empty();
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
    return search(a, b, true);
}

}  // namespace grpdeg
