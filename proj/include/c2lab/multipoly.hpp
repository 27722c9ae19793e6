#pragma once

#include "c2lab/bigint.hpp"
#include "c2lab/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c2lab {

struct Term {
    Monomial mono;
    Int coef;
};

// Sparse polynomial over Z in variables a1..a32. Terms are kept sorted in
// decreasing graded-lex order with no zero coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long long c);  // NOLINT: implicit constant
    MultiPoly(const Int& c);  // NOLINT
    static MultiPoly var(int v, int e = 1);
    static MultiPoly monomial(const Monomial& m, const Int& c);
    // Terms may be unsorted and contain duplicates or zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Int constant_value() const;  // requires is_constant()
    const Term& leading() const { return terms_.front(); }

    int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
    int degree_in(int v) const;
    std::uint32_t support() const;  // bitmask of variables present
    std::vector<int> variables() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Int& c) const;
    MultiPoly times_monomial(const Monomial& m) const;
    MultiPoly pow(int e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact division; throws std::domain_error when the remainder is nonzero.
    MultiPoly divide_exact(const MultiPoly& d) const;
    std::optional<MultiPoly> try_divide(const MultiPoly& d) const;

    MultiPoly coefficient_of(int v, int k) const;
    MultiPoly substitute(int v, const Int& value) const;
    MultiPoly substitute(int v, const MultiPoly& value) const;
    // new_index[v] for v in 1..kMaxVars; 0 keeps nothing (variable must be absent).
    MultiPoly rename(const std::vector<int>& new_index) const;
    Int content() const;  // gcd of coefficients, positive; 0 for the zero polynomial
    Int evaluate(const std::vector<Int>& point) const;  // point[v-1] is the value of a_v

    // Leading term positive.
    MultiPoly sign_normalized() const;
    bool same_up_to_sign(const MultiPoly& o) const { return *this == o || *this == -o; }

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// f^1 g_1 - f_1 g^1 for f = f^1 v + f_1, g = g^1 v + g_1.
MultiPoly resultant_linear(const MultiPoly& f, const MultiPoly& g, int v);

// r with r*r == p and leading term of r positive, if p is a perfect square.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

// Parses the canonical text form; also accepts parentheses, x<n> as a
// synonym of a<n>, and the bare letters a,b,c,d for a1..a4.
MultiPoly parse_poly(const std::string& text);

std::string variable_name(int v);

}  // namespace c2lab
