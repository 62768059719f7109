#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace fcamine {

/// Fixed-width bitset packed into 64-bit words. Bits past size() are kept
/// zero, so whole-word operations never need per-bit masking.
class Bitset {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Bitset() = default;

    explicit Bitset(std::size_t nbits, bool value = false)
        : nbits_(nbits), words_(word_count(nbits), 0) {
        if (value) set_all();
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & std::uint64_t{1};
    }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        mask_tail();
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// *this = x & y without reallocating (all three must share a size).
    void assign_and(const Bitset& x, const Bitset& y) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = x.words_[i] & y.words_[i];
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    static std::size_t and_count(const Bitset& x, const Bitset& y) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < x.words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(x.words_[i] & y.words_[i]));
        return n;
    }

    /// True when *this and o agree on every bit below `limit`.
    bool equal_below(const Bitset& o, std::size_t limit) const {
        const std::size_t full = limit >> 6;
        for (std::size_t i = 0; i < full; ++i)
            if (words_[i] != o.words_[i]) return false;
        const std::size_t rem = limit & 63;
        if (rem != 0) {
            const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
            if ((words_[full] ^ o.words_[full]) & mask) return false;
        }
        return true;
    }

    /// First set bit at index >= from, or npos.
    std::size_t next_set_bit(std::size_t from) const {
        if (from >= nbits_) return npos;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size()) return npos;
            cur = words_[w];
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur != 0) {
                fn((w << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// Three-way comparison of the ascending index sequences; a strict prefix
    /// sorts first, e.g. {} < {0,1,3} < {0,3} < {1}.
    static int compare_lex(const Bitset& x, const Bitset& y) {
        std::size_t i = x.next_set_bit(0);
        std::size_t j = y.next_set_bit(0);
        while (i != npos && j != npos) {
            if (i != j) return i < j ? -1 : 1;
            i = x.next_set_bit(i + 1);
            j = y.next_set_bit(j + 1);
        }
        if (i == j) return 0;
        return i == npos ? -1 : 1;
    }

    std::size_t hash() const {
        std::uint64_t h = 14695981039346656037ull;
        h = (h ^ nbits_) * 1099511628211ull;
        for (auto w : words_) h = (h ^ w) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }

private:
    static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

    void mask_tail() {
        const std::size_t rem = nbits_ & 63;
        if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace fcamine
