#include "c2lab/lpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace c2lab {

LPoly::LPoly(long long c) : LPoly(Int(c)) {}

LPoly::LPoly(const Int& c) {
    if (c != 0) c_.push_back(c);
}

LPoly::LPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

LPoly LPoly::L(int e) {
    if (e < 0) throw std::invalid_argument("negative power of L");
    std::vector<Int> c(e + 1, 0);
    c[e] = 1;
    return LPoly(std::move(c));
}

void LPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return LPoly(std::move(r));
}

LPoly LPoly::pow(int e) const {
    LPoly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

LPoly LPoly::divide_exact(const LPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero LPoly");
    if (is_zero()) return {};
    std::vector<Int> rem = c_;
    int qdeg = degree() - d.degree();
    if (qdeg < 0) throw std::domain_error("LPoly division is not exact");
    std::vector<Int> q(qdeg + 1, 0);
    for (int i = degree(); i >= d.degree(); --i) {
        if (rem[i] == 0) continue;
        const Int& lead = d.c_.back();
        if (rem[i] % lead != 0) throw std::domain_error("LPoly division is not exact");
        Int k = rem[i] / lead;
        q[i - d.degree()] = k;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= k * d.c_[j];
    }
    for (auto& x : rem)
        if (x != 0) throw std::domain_error("LPoly division is not exact");
    return LPoly(std::move(q));
}

Int LPoly::evaluate(const Int& q) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * q + c_[i];
    return r;
}

std::string LPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Int c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "L";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string LPoly::coeff_list() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? ", " : "") << c_[i];
    out << "]";
    return out.str();
}

namespace {

using TPoly = RationalSeries::TPoly;

void trim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly tmul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

TPoly tadd(const TPoly& a, const TPoly& b, int sign) {
    TPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign > 0 ? b[i] : -b[i];
    trim(r);
    return r;
}

}  // namespace

RationalSeries::RationalSeries(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
    trim(num_);
    trim(den_);
    if (den_.empty() || den_[0].is_zero()) throw std::invalid_argument("series denominator needs a nonzero constant term");
}

RationalSeries::RationalSeries(const LPoly& c) : RationalSeries(TPoly{c}, TPoly{LPoly(1)}) {}

RationalSeries RationalSeries::t(int e) {
    TPoly n(e + 1);
    n[e] = LPoly(1);
    return RationalSeries(n, {LPoly(1)});
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    if (a.den_ == b.den_) return RationalSeries(tadd(a.num_, b.num_, 1), a.den_);
    return RationalSeries(tadd(tmul(a.num_, b.den_), tmul(b.num_, a.den_), 1), tmul(a.den_, b.den_));
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    if (a.den_ == b.den_) return RationalSeries(tadd(a.num_, b.num_, -1), a.den_);
    return RationalSeries(tadd(tmul(a.num_, b.den_), tmul(b.num_, a.den_), -1), tmul(a.den_, b.den_));
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(tmul(a.num_, b.num_), tmul(a.den_, b.den_));
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    TPoly bn = b.num_;
    TPoly an = a.num_;
    TPoly ad = a.den_;
    TPoly bd = b.den_;
    // Leading powers of t in b's numerator cancel against a's numerator.
    while (!bn.empty() && bn[0].is_zero()) {
        if (an.empty() || !an[0].is_zero()) throw std::domain_error("series quotient has a pole at t = 0");
        bn.erase(bn.begin());
        an.erase(an.begin());
    }
    if (bn.empty()) throw std::domain_error("series division by zero");
    return RationalSeries(tmul(an, bd), tmul(ad, bn));
}

RationalSeries RationalSeries::operator-() const {
    TPoly n = num_;
    for (auto& c : n) c = -c;
    return RationalSeries(n, den_);
}

std::vector<LPoly> RationalSeries::coefficients(int n_max) const {
    std::vector<LPoly> s(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        LPoly acc = n < static_cast<int>(num_.size()) ? num_[n] : LPoly();
        for (int k = 1; k <= n && k < static_cast<int>(den_.size()); ++k) acc -= den_[k] * s[n - k];
        s[n] = acc.divide_exact(den_[0]);
    }
    return s;
}

}  // namespace c2lab
