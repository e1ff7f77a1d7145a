#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace wposet {

// Fixed-width bitset over poset element indices. Posets in this library are
// rejected at construction if they exceed kMaxBits elements, so a flat
// 4-word set is enough everywhere.
struct Bits {
    static constexpr int kMaxBits = 256;

    std::array<std::uint64_t, 4> w{};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const { return w[0] | w[1] | w[2] | w[3]; }
    bool none() const { return !any(); }

    friend Bits operator&(Bits a, const Bits& b) {
        for (int i = 0; i < 4; ++i) a.w[i] &= b.w[i];
        return a;
    }
    friend Bits operator|(Bits a, const Bits& b) {
        for (int i = 0; i < 4; ++i) a.w[i] |= b.w[i];
        return a;
    }
    friend Bits operator^(Bits a, const Bits& b) {
        for (int i = 0; i < 4; ++i) a.w[i] ^= b.w[i];
        return a;
    }
    Bits& operator|=(const Bits& b) {
        for (int i = 0; i < 4; ++i) w[i] |= b.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& b) {
        for (int i = 0; i < 4; ++i) w[i] &= b.w[i];
        return *this;
    }

    // a \ b
    Bits andnot(const Bits& b) const {
        Bits r = *this;
        for (int i = 0; i < 4; ++i) r.w[i] &= ~b.w[i];
        return r;
    }

    bool subset_of(const Bits& b) const { return andnot(b).none(); }

    friend bool operator==(const Bits& a, const Bits& b) = default;
    friend auto operator<=>(const Bits& a, const Bits& b) = default;

    static Bits full(int n) {
        Bits r;
        for (int i = 0; i < n; ++i) r.set(i);
        return r;
    }

    Bits complement(int n) const { return full(n).andnot(*this); }

    // lowest set bit, -1 if empty
    int first() const {
        for (int k = 0; k < 4; ++k)
            if (w[k]) return 64 * k + std::countr_zero(w[k]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int k = 0; k < 4; ++k) {
            std::uint64_t x = w[k];
            while (x) {
                f(64 * k + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

}  // namespace wposet
