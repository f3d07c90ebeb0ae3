#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qig {

// Fixed-size dense bitset. The adjacency rows and every solver candidate set
// live in these, so the word operations are the hot path of the whole build.
class Bitset {
public:
    static constexpr std::size_t npos = std::size_t(-1);

    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() {
        for (auto& w : w_) w = 0;
    }
    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t(0);
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::size_t(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    void flip() {
        for (auto& w : w_) w = ~w;
        trim();
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::size_t find_first() const { return find_from_word(0); }
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= size_) return npos;
        std::size_t wi = i >> 6;
        const std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (i & 63));
        if (w) return (wi << 6) + std::size_t(std::countr_zero(w));
        return find_from_word(wi + 1);
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                fn((wi << 6) + std::size_t(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return w_; }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t find_from_word(std::size_t wi) const {
        for (; wi < w_.size(); ++wi)
            if (w_[wi]) return (wi << 6) + std::size_t(std::countr_zero(w_[wi]));
        return npos;
    }
    void trim() {
        if (size_ & 63) w_.back() &= (std::uint64_t(1) << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::size_t intersect_count(const Bitset& a, const Bitset& b) {
    std::size_t c = 0;
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) c += std::size_t(std::popcount(wa[i] & wb[i]));
    return c;
}

} // namespace qig
