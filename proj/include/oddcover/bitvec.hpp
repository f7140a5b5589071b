#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace oddcover {

/// Dynamic bit vector backed by 64-bit words. Sizes are capped at
/// kMaxBits; everything in this project is desk-scale.
class BitVec {
public:
    static constexpr std::size_t kMaxBits = 4096;

    BitVec() = default;

    explicit BitVec(std::size_t nbits) : nbits_(nbits) {
        if (nbits > kMaxBits)
            throw std::length_error("BitVec: size exceeds 4096-bit cap");
        words_.assign((nbits + 63) / 64, 0);
    }

    static BitVec from_indices(std::size_t nbits, std::initializer_list<std::size_t> idx) {
        BitVec v(nbits);
        for (std::size_t i : idx) v.set(i);
        return v;
    }

    static BitVec from_indices(std::size_t nbits, const std::vector<std::size_t>& idx) {
        BitVec v(nbits);
        for (std::size_t i : idx) v.set(i);
        return v;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check(i);
        if (value)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i) {
        check(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVec& operator^=(const BitVec& o) {
        require_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        require_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    BitVec& operator|=(const BitVec& o) {
        require_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// popcount(*this & o) without materializing the intersection.
    std::size_t count_and(const BitVec& o) const {
        require_same(o);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const BitVec& o) const {
        require_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return nbits_;
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec& o) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check(std::size_t i) const {
        if (i >= nbits_) throw std::out_of_range("BitVec: index out of range");
    }
    void require_same(const BitVec& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("BitVec: size mismatch");
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace oddcover
