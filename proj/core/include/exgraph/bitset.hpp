#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace exgraph {

// Fixed-width dynamic bitset used for adjacency rows and clique-search
// candidate sets. Word count is fixed at construction; all binary
// operations require operands of the same width.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

    int size() const noexcept { return nbits_; }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= bit(i); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~bit(i); }

    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] & bit(i)) != 0;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const noexcept { return !any(); }

    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool intersects(const Bitset& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    // Lowest set bit, or -1 when empty.
    int first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    // Next set bit strictly after i, or -1.
    int next(int i) const noexcept {
        std::size_t k = static_cast<std::size_t>(i + 1) >> 6;
        if (k >= words_.size()) return -1;
        std::uint64_t w = words_[k] & ~((bit(i + 1)) - 1);
        while (true) {
            if (w) return static_cast<int>(k * 64) + std::countr_zero(w);
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    static std::uint64_t bit(int i) noexcept {
        return std::uint64_t{1} << (static_cast<unsigned>(i) & 63u);
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace exgraph
