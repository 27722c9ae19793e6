#include "c2lab/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace c2lab {

namespace {

struct DescMono {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

using TermMap = std::map<Monomial, Int, DescMono>;

void sort_terms(std::vector<Term>& t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return b.mono < a.mono; });
}

}  // namespace

MultiPoly::MultiPoly(long long c) {
    if (c != 0) terms_.push_back({Monomial(), Int(c)});
}

MultiPoly::MultiPoly(const Int& c) {
    if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::var(int v, int e) { return monomial(Monomial::var(v, e), 1); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Int& c) {
    MultiPoly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> t) {
    sort_terms(t);
    MultiPoly p;
    p.terms_.reserve(t.size());
    for (auto& term : t) {
        if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
            p.terms_.back().coef += term.coef;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(term));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
    return p;
}

Int MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!terms_[0].mono.is_one() || terms_.size() != 1) throw std::logic_error("not a constant");
    return terms_[0].coef;
}

int MultiPoly::degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

std::uint32_t MultiPoly::support() const {
    std::uint32_t s = 0;
    for (auto& t : terms_) s |= t.mono.support();
    return s;
}

std::vector<int> MultiPoly::variables() const {
    std::vector<int> out;
    std::uint32_t s = support();
    for (int v = 1; v <= kMaxVars; ++v)
        if (s & (1u << (v - 1))) out.push_back(v);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size()) {
            out.push_back(o.terms_[j++]);
        } else {
            int c = terms_[i].mono.compare(o.terms_[j].mono);
            if (c > 0) {
                out.push_back(std::move(terms_[i++]));
            } else if (c < 0) {
                out.push_back(o.terms_[j++]);
            } else {
                Int s = terms_[i].coef + o.terms_[j].coef;
                if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.times_monomial(a.terms_[0].mono).scaled(a.terms_[0].coef);
    if (b.size() == 1) return a.times_monomial(b.terms_[0].mono).scaled(b.terms_[0].coef);
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) acc[x.mono * y.mono] += x.coef * y.coef;
    std::vector<Term> t;
    t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) t.push_back({m, std::move(c)});
    sort_terms(t);
    MultiPoly r;
    r.terms_ = std::move(t);
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Int& c) const {
    if (c == 0) return {};
    MultiPoly r = *this;
    if (c != 1)
        for (auto& t : r.terms_) t.coef *= c;
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
    MultiPoly r = *this;
    if (!m.is_one())
        for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return MultiPoly();
    if (d.size() == 1) {
        const Term& t = d.terms_[0];
        std::vector<Term> q;
        q.reserve(terms_.size());
        for (auto& x : terms_) {
            if (!t.mono.divides(x.mono)) return std::nullopt;
            Int qr, rr;
            boost::multiprecision::divide_qr(x.coef, t.coef, qr, rr);
            if (rr != 0) return std::nullopt;
            q.push_back({t.mono.quotient_of(x.mono), std::move(qr)});
        }
        MultiPoly r;
        r.terms_ = std::move(q);  // order preserved by monomial division
        return r;
    }
    TermMap rem;
    for (auto& x : terms_) rem.emplace(x.mono, x.coef);
    const Term& lt = d.terms_[0];
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lt.mono.divides(it->first)) return std::nullopt;
        Int qc, rc;
        boost::multiprecision::divide_qr(it->second, lt.coef, qc, rc);
        if (rc != 0) return std::nullopt;
        Monomial qm = lt.mono.quotient_of(it->first);
        for (auto& y : d.terms_) {
            Monomial m = y.mono * qm;
            auto [pos, inserted] = rem.emplace(m, Int(0));
            pos->second -= y.coef * qc;
            if (pos->second == 0) rem.erase(pos);
        }
        q.push_back({qm, std::move(qc)});
    }
    MultiPoly r;
    r.terms_ = std::move(q);  // generated in decreasing order
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
    auto q = try_divide(d);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}

MultiPoly MultiPoly::coefficient_of(int v, int k) const {
    std::vector<Term> t;
    for (auto& x : terms_) {
        if (x.mono.exponent(v) == k) {
            Monomial m = x.mono;
            m.set(v, 0);
            t.push_back({m, x.coef});
        }
    }
    return from_terms(std::move(t));
}

MultiPoly MultiPoly::substitute(int v, const Int& value) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (auto& x : terms_) {
        int e = x.mono.exponent(v);
        if (e == 0) {
            t.push_back(x);
        } else if (value != 0) {
            Monomial m = x.mono;
            m.set(v, 0);
            t.push_back({m, x.coef * boost::multiprecision::pow(value, e)});
        }
    }
    return from_terms(std::move(t));
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& value) const {
    int d = degree_in(v);
    if (d <= 0) return *this;
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (int i = 1; i <= d; ++i) powers.push_back(powers.back() * value);
    MultiPoly r;
    for (int i = 0; i <= d; ++i) {
        MultiPoly c = coefficient_of(v, i);
        if (!c.is_zero()) r += c * powers[i];
    }
    return r;
}

MultiPoly MultiPoly::rename(const std::vector<int>& new_index) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (auto& x : terms_) {
        Monomial m;
        for (int v = 1; v <= kMaxVars; ++v) {
            int e = x.mono.exponent(v);
            if (!e) continue;
            int nv = v < static_cast<int>(new_index.size()) ? new_index[v] : 0;
            if (nv <= 0) throw std::invalid_argument("rename drops a variable in use");
            m.set(nv, m.exponent(nv) + e);
        }
        t.push_back({m, x.coef});
    }
    return from_terms(std::move(t));
}

Int MultiPoly::content() const {
    Int g = 0;
    for (auto& t : terms_) {
        g = boost::multiprecision::gcd(g, t.coef);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

Int MultiPoly::evaluate(const std::vector<Int>& point) const {
    Int s = 0;
    for (auto& t : terms_) {
        Int v = t.coef;
        for (int i = 1; i <= kMaxVars; ++i) {
            int e = t.mono.exponent(i);
            if (!e) continue;
            if (i > static_cast<int>(point.size())) throw std::out_of_range("evaluation point too short");
            v *= boost::multiprecision::pow(point[i - 1], e);
        }
        s += v;
    }
    return s;
}

MultiPoly MultiPoly::sign_normalized() const {
    if (!terms_.empty() && terms_[0].coef < 0) return -*this;
    return *this;
}

std::string variable_name(int v) { return "a" + std::to_string(v); }

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Int c = t.coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (c != 1 || t.mono.is_one()) {
            os << c.str();
            need_star = true;
        }
        for (int v = 1; v <= kMaxVars; ++v) {
            int e = t.mono.exponent(v);
            if (!e) continue;
            if (need_star) os << "*";
            os << variable_name(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly resultant_linear(const MultiPoly& f, const MultiPoly& g, int v) {
    if (f.degree_in(v) > 1 || g.degree_in(v) > 1)
        throw std::invalid_argument("resultant_linear: degree > 1 in " + variable_name(v));
    return f.coefficient_of(v, 1) * g.coefficient_of(v, 0) - f.coefficient_of(v, 0) * g.coefficient_of(v, 1);
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly();
    const Term& lt = p.leading();
    if (lt.coef < 0) return std::nullopt;
    Int rc = boost::multiprecision::sqrt(lt.coef);
    if (rc * rc != lt.coef) return std::nullopt;
    Monomial rm;
    for (int v = 1; v <= kMaxVars; ++v) {
        int e = lt.mono.exponent(v);
        if (e & 1) return std::nullopt;
        if (e) rm.set(v, e / 2);
    }
    // Term-by-term extraction: the leading term of p - r^2 is 2*lt(r)*t for
    // the next term t of the root.
    std::vector<Term> root{{rm, rc}};
    TermMap rem;
    for (auto& x : p.terms()) rem.emplace(x.mono, x.coef);
    auto sub_product = [&](const Term& a, const Term& b, const Int& mult) {
        Monomial m = a.mono * b.mono;
        auto [pos, ins] = rem.emplace(m, Int(0));
        pos->second -= mult * a.coef * b.coef;
        if (pos->second == 0) rem.erase(pos);
    };
    sub_product(root[0], root[0], 1);
    Int two_lc = 2 * rc;
    const int min_deg = p.terms().back().mono.degree();
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!rm.divides(it->first)) return std::nullopt;
        Int qc, qr;
        boost::multiprecision::divide_qr(it->second, two_lc, qc, qr);
        if (qr != 0) return std::nullopt;
        Term t{rm.quotient_of(it->first), qc};
        if (!(t.mono < root.back().mono)) return std::nullopt;
        if (2 * t.mono.degree() < min_deg) return std::nullopt;
        for (auto& r : root) sub_product(r, t, 2);
        sub_product(t, t, 1);
        root.push_back(std::move(t));
    }
    MultiPoly r = MultiPoly::from_terms(std::move(root));
    if (r * r != p) return std::nullopt;
    return r;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MultiPoly parse() {
        MultiPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    MultiPoly expr() {
        MultiPoly r;
        bool neg = accept('-');
        if (!neg) accept('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }
    MultiPoly term() {
        MultiPoly r = power();
        while (accept('*')) r *= power();
        return r;
    }
    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(st, i_ - st)));
        }
        return base;
    }
    MultiPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            MultiPoly r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++i_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return MultiPoly(Int(s_.substr(st, i_ - st)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            ++i_;
            std::size_t ds = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (ds == i_) {
                if (c >= 'a' && c <= 'd') return MultiPoly::var(c - 'a' + 1);
                i_ = st;
                fail("unknown variable");
            }
            if (c != 'a' && c != 'x') {
                i_ = st;
                fail("unknown variable prefix");
            }
            int v = std::stoi(s_.substr(ds, i_ - ds));
            if (v < 1 || v > kMaxVars) fail("variable index out of range");
            return MultiPoly::var(v);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace c2lab
