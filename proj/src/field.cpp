#include "c2lab/field.hpp"

#include <stdexcept>

namespace c2lab {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<int>;  // coefficients low to high, over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int shift = static_cast<int>(a.size()) - 1 - dm;
        int c = a.back();
        for (int i = 0; i <= dm; ++i) a[i + shift] = ((a[i + shift] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

bool irreducible(const Poly& m, int p) {
    const int n = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            long long x = code;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(x % p);
                x /= p;
            }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

Poly code_to_poly(FqElem c, int p, int n) {
    Poly a(n, 0);
    for (int i = 0; i < n; ++i) {
        a[i] = static_cast<int>(c % p);
        c /= p;
    }
    return a;
}

FqElem poly_to_code(const Poly& a, int p) {
    FqElem c = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) c = c * p + a[i];
    return c;
}

FqElem slow_mul(FqElem a, FqElem b, const Poly& m, int p, int n) {
    Poly x = code_to_poly(a, p, n), y = code_to_poly(b, p, n);
    Poly r(2 * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    return poly_to_code(poly_mod(r, m, p), p);
}

}  // namespace

FqSpec::FqSpec(int p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (n < 1) throw std::invalid_argument("field degree must be positive");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size exceeds 2^16");
    }
    q_ = static_cast<int>(q);
    auto t = std::make_shared<Tables>();
    // Smallest base-p code c_0 + c_1 p + ... among monic irreducibles of degree n.
    for (long long code = 0;; ++code) {
        Poly m(n + 1, 0);
        long long x = code;
        for (int i = 0; i < n; ++i) {
            m[i] = static_cast<int>(x % p);
            x /= p;
        }
        m[n] = 1;
        if (irreducible(m, p)) {
            t->modulus = m;
            break;
        }
    }
    // Primitive element: smallest code of multiplicative order q-1.
    t->exp.assign(2 * (q_ - 1), 0);
    t->log.assign(q_, 0);
    for (FqElem g = 1; g < static_cast<FqElem>(q_); ++g) {
        FqElem x = 1;
        bool ok = true;
        for (int i = 0; i < q_ - 1; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            t->exp[i] = x;
            x = slow_mul(x, g, t->modulus, p, n);
        }
        if (ok && x == 1) {
            t->generator = g;
            break;
        }
    }
    if (q_ == 2) t->generator = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        t->exp[i + q_ - 1] = t->exp[i];
        t->log[t->exp[i]] = static_cast<std::uint32_t>(i);
    }
    t->neg.resize(q_);
    for (int a = 0; a < q_; ++a) {
        Poly x = code_to_poly(a, p, n);
        for (auto& c : x) c = (p - c) % p;
        t->neg[a] = poly_to_code(x, p);
    }
    t_ = t;
    if (n > 1 && p != 2 && q_ <= 1024) {
        t->add.resize(static_cast<std::size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) t->add[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
    }
    // Trace: sum of Frobenius conjugates a^(p^i), which lies in F_p.
    t->trace.resize(q_);
    for (int a = 0; a < q_; ++a) {
        FqElem s = 0, x = a;
        for (int i = 0; i < n; ++i) {
            s = add(s, x);
            x = pow(x, p);
        }
        t->trace[a] = static_cast<int>(s);
    }
}

FqSpec FqSpec::of_size(int q) {
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    int p = 2;
    while (q % p) ++p;
    int n = 0;
    long long x = q;
    while (x % p == 0) {
        x /= p;
        ++n;
    }
    if (x != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return FqSpec(p, n);
}

FqElem FqSpec::add_digits(FqElem a, FqElem b) const {
    FqElem r = 0, scale = 1;
    for (int i = 0; i < n_; ++i) {
        FqElem d = (a % p_ + b % p_) % p_;
        r += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

FqElem FqSpec::add(FqElem a, FqElem b) const {
    if (n_ == 1) {
        FqElem s = a + b;
        return s >= static_cast<FqElem>(p_) ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!t_->add.empty()) return t_->add[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
}

FqElem FqSpec::neg(FqElem a) const { return t_->neg[a]; }

FqElem FqSpec::inv(FqElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return t_->exp[(q_ - 1 - t_->log[a]) % (q_ - 1)];
}

FqElem FqSpec::pow(FqElem a, long long e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    long long l = (static_cast<long long>(t_->log[a]) * (e % (q_ - 1))) % (q_ - 1);
    return t_->exp[l];
}

FqElem FqSpec::from_int(long long c) const { return static_cast<FqElem>(((c % p_) + p_) % p_); }

FqElem FqSpec::from_int(const Int& c) const { return static_cast<FqElem>(mod_floor(c, p_)); }

int FqSpec::quadratic_character(FqElem a) const {
    if (p_ == 2) throw std::logic_error("quadratic character needs odd characteristic");
    if (a == 0) return 0;
    return t_->log[a] % 2 == 0 ? 1 : -1;
}

int FqSpec::trace(FqElem a) const { return t_->trace[a]; }

std::string FqSpec::to_string() const {
    std::string s = "F_" + std::to_string(q_);
    if (n_ > 1) {
        s += " = F_" + std::to_string(p_) + "[x]/(";
        bool first = true;
        for (int i = n_; i >= 0; --i) {
            int c = t_->modulus[i];
            if (!c) continue;
            if (!first) s += " + ";
            first = false;
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i > 0) s += (i == 1 ? "x" : "x^" + std::to_string(i));
        }
        s += ")";
    }
    return s;
}

FqElem eval_fq(const MultiPoly& poly, const std::vector<FqElem>& point, const FqSpec& f) {
    for (FqElem x : point)
        if (x >= static_cast<FqElem>(f.q())) throw std::invalid_argument("eval_fq: point coordinate not in " + f.to_string());
    FqElem acc = 0;
    for (const auto& t : poly.terms()) {
        FqElem v = f.from_int(t.coef);
        for (int var = 1; var <= kMaxVars && v; ++var) {
            int e = t.mono.exponent(var);
            if (!e) continue;
            if (var > static_cast<int>(point.size())) throw std::invalid_argument("eval_fq: point too short");
            v = f.mul(v, f.pow(point[var - 1], e));
        }
        acc = f.add(acc, v);
    }
    return acc;
}

}  // namespace c2lab
