#pragma once

#include "c2lab/bigint.hpp"

#include <string>
#include <vector>

namespace c2lab {

// Polynomial in the Lefschetz symbol L with integer coefficients, stored
// ascending with no trailing zeros.
class LPoly {
public:
    LPoly() = default;
    LPoly(long long c);  // NOLINT
    LPoly(const Int& c);  // NOLINT
    explicit LPoly(std::vector<Int> ascending);
    static LPoly L(int e = 1);

    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0); }

    LPoly operator-() const;
    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly pow(int e) const;
    bool operator==(const LPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LPoly& o) const { return c_ != o.c_; }

    // Throws std::domain_error unless d divides exactly in Z[L].
    LPoly divide_exact(const LPoly& d) const;

    Int evaluate(const Int& q) const;

    // "L^7 + 6*L^5 - 1"
    std::string to_string() const;
    // "[c0, c1, ...]"
    std::string coeff_list() const;

private:
    std::vector<Int> c_;
    void trim();
};

// Ratio of two polynomials in t with LPoly coefficients. The denominator's
// constant term is nonzero; expansion divides by it exactly.
class RationalSeries {
public:
    using TPoly = std::vector<LPoly>;

    RationalSeries(TPoly num, TPoly den);
    RationalSeries(const LPoly& c);  // NOLINT
    static RationalSeries t(int e = 1);

    const TPoly& numerator() const { return num_; }
    const TPoly& denominator() const { return den_; }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
    RationalSeries operator-() const;

    // Coefficients of t^0..t^n_max.
    std::vector<LPoly> coefficients(int n_max) const;

private:
    TPoly num_, den_;
};

}  // namespace c2lab
