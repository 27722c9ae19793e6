#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace c2lab {

// Variables are numbered 1..kMaxVars.
constexpr int kMaxVars = 32;
constexpr int kMaxExponent = 127;

// Exponent vector packed one byte per variable. Variable 1 sits in the most
// significant byte of word 0, so comparing words numerically is lex order
// with variable 1 most significant.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(int v, int e = 1) {
        Monomial m;
        m.set(v, e);
        return m;
    }

    int exponent(int v) const {
        int j = v - 1;
        return static_cast<int>((w_[j >> 3] >> shift(j)) & 0xFF);
    }

    void set(int v, int e) {
        if (v < 1 || v > kMaxVars) throw std::out_of_range("variable index out of range");
        if (e < 0 || e > kMaxExponent) throw std::overflow_error("exponent out of range");
        int j = v - 1;
        int old = exponent(v);
        w_[j >> 3] &= ~(std::uint64_t{0xFF} << shift(j));
        w_[j >> 3] |= std::uint64_t(e) << shift(j);
        deg_ = deg_ - old + e;
    }

    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) {
            r.w_[i] = w_[i] + o.w_[i];
            if (r.w_[i] & kHigh) throw std::overflow_error("exponent overflow");
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < 4; ++i)
            if ((((o.w_[i] | kHigh) - w_[i]) & kHigh) != kHigh) return false;
        return true;
    }

    // o / *this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) r.w_[i] = ((o.w_[i] | kHigh) - w_[i]) ^ kHigh;
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    // Graded lex: total degree first, then lex with variable 1 most significant.
    int compare(const Monomial& o) const {
        if (deg_ != o.deg_) return deg_ < o.deg_ ? -1 : 1;
        for (int i = 0; i < 4; ++i)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i] ? -1 : 1;
        return 0;
    }

    bool operator==(const Monomial& o) const { return w_ == o.w_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const { return compare(o) < 0; }

    std::uint32_t support() const {
        std::uint32_t s = 0;
        for (int v = 1; v <= kMaxVars; ++v)
            if (exponent(v)) s |= 1u << (v - 1);
        return s;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (auto x : w_) {
            h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    const std::array<std::uint64_t, 4>& words() const { return w_; }

private:
    static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    static int shift(int j) { return 56 - 8 * (j & 7); }

    std::array<std::uint64_t, 4> w_{};
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace c2lab
