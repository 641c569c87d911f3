#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace grpdeg {

/// Set of element indices over a fixed universe [0, universe), stored as a
/// packed bit vector. Equality, intersection, union and subset tests are
/// word-parallel; this is the canonical representation of a subgroup's
/// member set.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe)
        : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

    int universe() const { return universe_; }

    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w) return false;
        }
        return true;
    }

    bool is_subset_of(const ElementSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~other.words_[k]) return false;
        }
        return true;
    }

    ElementSet operator&(const ElementSet& other) const {
        ElementSet r(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & other.words_[k];
        return r;
    }

    ElementSet operator|(const ElementSet& other) const {
        ElementSet r(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | other.words_[k];
        return r;
    }

    bool operator==(const ElementSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }

    bool operator!=(const ElementSet& other) const { return !(*this == other); }

    /// Orders sets by their sorted member sequences, lexicographically:
    /// the set owning the smallest element where the two differ comes first.
    /// Used to fix a reproducible lattice ordering.
    bool set_less(const ElementSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t d = words_[k] ^ other.words_[k];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (words_[k] & low) != 0;
            }
        }
        return false;
    }

    /// Calls fn(i) for every member i, ascending.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<int>(k * 64) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(universe_));
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace grpdeg
