#pragma once

#include "c2lab/bigint.hpp"
#include "c2lab/multipoly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace c2lab {

// Elements of F_q are base-p codes 0..q-1: code sum c_i p^i is the residue
// class of sum c_i x^i modulo the defining polynomial.
using FqElem = std::uint32_t;

constexpr int kMaxFieldSize = 1 << 16;

class FqSpec {
public:
    // Throws std::invalid_argument for non-prime p or p^n > 2^16.
    FqSpec(int p, int n = 1);
    static FqSpec of_size(int q);  // q must be a prime power

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    // Monic modulus, coefficients c_0..c_n (c_n = 1).
    const std::vector<int>& modulus() const { return t_->modulus; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const {
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    FqElem inv(FqElem a) const;  // throws std::domain_error for 0
    FqElem pow(FqElem a, long long e) const;
    FqElem from_int(const Int& c) const;
    FqElem from_int(long long c) const;
    // Primitive element (smallest code generating the unit group).
    FqElem generator() const { return t_->generator; }
    // All elements in code order.
    std::vector<FqElem> elements() const {
        std::vector<FqElem> e(q_);
        for (int i = 0; i < q_; ++i) e[i] = static_cast<FqElem>(i);
        return e;
    }

    // Quadratic character for odd q: 1 square, -1 non-square, 0 for zero.
    int quadratic_character(FqElem a) const;
    // Absolute trace to F_p (as an integer 0..p-1).
    int trace(FqElem a) const;

    std::string to_string() const;
    bool operator==(const FqSpec& o) const { return q_ == o.q_ && t_->modulus == o.t_->modulus; }

private:
    struct Tables {
        std::vector<int> modulus;
        std::vector<FqElem> exp;     // length 2(q-1)
        std::vector<std::uint32_t> log;
        std::vector<FqElem> add;     // q*q table when q <= 1024 and n > 1
        std::vector<FqElem> neg;
        std::vector<int> trace;
        FqElem generator = 0;
    };
    int p_ = 2, n_ = 1, q_ = 2;
    std::shared_ptr<const Tables> t_;
    FqElem add_digits(FqElem a, FqElem b) const;
};

bool is_prime(long long n);

// Evaluates p at point (point[v-1] is the value of a_v), reducing coefficients mod char.
FqElem eval_fq(const MultiPoly& p, const std::vector<FqElem>& point, const FqSpec& f);

}  // namespace c2lab
