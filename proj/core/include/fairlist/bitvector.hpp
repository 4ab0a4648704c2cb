#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fairlist {

// Fixed-width bit vector over 64-bit words. One instance per binary feature,
// per antecedent capture set, per label/group/prediction vector. All samplewise
// set algebra in the library goes through the fused count_* helpers below so
// hot loops never materialize temporaries.
//
// Invariant: bits past size() in the last word are always zero, so operator==
// and hashing can work on whole words.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t nbits, bool fill = false)
        : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        mask_tail();
    }

    static BitVector from_bits(const std::vector<bool>& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) v.set(i);
        return v;
    }

    /// Parse "101..." (most-significant sample first is NOT implied; index 0
    /// is the first character). Test convenience.
    static BitVector from_string(const std::string& s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') v.set(i);
        return v;
    }

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        assert(i < nbits_);
        if (value)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    BitVector& operator&=(const BitVector& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    BitVector& and_not_assign(const BitVector& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    BitVector and_not(const BitVector& o) const {
        BitVector r = *this;
        r.and_not_assign(o);
        return r;
    }

    BitVector complement() const {
        BitVector r = *this;
        for (auto& w : r.words_) w = ~w;
        r.mask_tail();
        return r;
    }

    bool operator==(const BitVector& o) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

    // ---- fused counting, no temporaries ----

    static std::size_t count_and(const BitVector& a, const BitVector& b) {
        assert(a.nbits_ == b.nbits_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }
    /// |a & b & c|
    static std::size_t count_and3(const BitVector& a, const BitVector& b, const BitVector& c) {
        assert(a.nbits_ == b.nbits_ && b.nbits_ == c.nbits_);
        std::size_t n = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i] & c.words_[i]));
        return n;
    }
    /// |a & ~b|
    static std::size_t count_and_not(const BitVector& a, const BitVector& b) {
        assert(a.nbits_ == b.nbits_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & ~b.words_[i]));
        return c;
    }

    /// Call fn(index) for every set bit, ascending.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int bit = std::countr_zero(w);
                fn(wi * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

private:
    void mask_tail() {
        const std::size_t tail = nbits_ & 63;
        if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace fairlist
