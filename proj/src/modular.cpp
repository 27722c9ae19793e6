#include "c2lab/modular.hpp"

#include "c2lab/graph.hpp"
#include "c2lab/reduction.hpp"

#include "json.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace c2lab {

namespace {

// Roots in F_q of A x^2 + B x + C.
long long quadratic_roots(const FqSpec& f, FqElem A, FqElem B, FqElem C) {
    if (A == 0) {
        if (B != 0) return 1;
        return C == 0 ? f.q() : 0;
    }
    if (f.p() != 2) {
        FqElem disc = f.sub(f.mul(B, B), f.mul(f.from_int(4LL), f.mul(A, C)));
        return 1 + f.quadratic_character(disc);
    }
    if (B == 0) return 1;  // squaring is bijective in characteristic 2
    // x = (B/A) t turns the equation into t^2 + t + AC/B^2 = 0.
    FqElem u = f.mul(f.mul(A, C), f.inv(f.mul(B, B)));
    return f.trace(u) == 0 ? 2 : 0;
}

MultiPoly derivative(const MultiPoly& p, int v) {
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(v, e - 1);
        out.push_back({m, t.coef * e});
    }
    return MultiPoly::from_terms(std::move(out));
}

// Sparse theta_{a,b} = sum_n (-1)^n q^{a n(n+1)/2 + b n(n-1)/2}, truncated at n_max.
std::vector<long long> theta_series(int a, int b, int n_max) {
    std::vector<long long> s(n_max + 1, 0);
    for (long long n = 0;; ++n) {
        long long e = a * n * (n + 1) / 2 + b * n * (n - 1) / 2;
        if (e > n_max) break;
        s[e] += (n % 2) ? -1 : 1;
    }
    for (long long n = -1;; --n) {
        long long e = a * n * (n + 1) / 2 + b * n * (n - 1) / 2;
        if (e > n_max) break;
        s[e] += (n % 2) ? -1 : 1;
    }
    return s;
}

std::vector<long long> mul_trunc(const std::vector<long long>& x, const std::vector<long long>& y, int n_max) {
    std::vector<long long> r(n_max + 1, 0);
    for (int i = 0; i <= n_max; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; i + j <= n_max; ++j)
            if (y[j] != 0) r[i + j] += x[i] * y[j];
    }
    return r;
}

std::vector<long long> shifted(const std::vector<long long>& x, int k, long long sign) {
    std::vector<long long> r(x.size(), 0);
    for (std::size_t i = 0; i + k < x.size(); ++i) r[i + k] = sign * x[i];
    return r;
}

struct LineFixture {
    std::string name;
    std::vector<std::array<int, 4>> forms;  // two linear forms cutting the line
    std::array<int, 4> p, q;                // spanning points
};

const std::vector<LineFixture>& line_fixtures() {
    static const std::vector<LineFixture> lines = {
        {"l1", {{0, 0, 1, 0}, {0, 0, 0, 1}}, {1, 0, 0, 0}, {0, 1, 0, 0}},
        {"l2", {{0, 1, 0, 0}, {0, 0, 0, 1}}, {1, 0, 0, 0}, {0, 0, 1, 0}},
        {"l3", {{1, 0, 0, 0}, {0, 0, 0, 1}}, {0, 1, 0, 0}, {0, 0, 1, 0}},
        {"l4", {{0, 1, 0, 0}, {0, 0, 1, 0}}, {1, 0, 0, 0}, {0, 0, 0, 1}},
        {"l5", {{1, 0, 0, 0}, {0, 0, 1, 0}}, {0, 1, 0, 0}, {0, 0, 0, 1}},
        {"l6", {{1, 0, 0, 0}, {0, 1, 0, 0}}, {0, 0, 1, 0}, {0, 0, 0, 1}},
        {"l7", {{1, 0, 1, 0}, {0, 0, 0, 1}}, {1, 0, -1, 0}, {0, 1, 0, 0}},
        {"l8", {{0, 0, 1, 0}, {0, 1, 0, -1}}, {1, 0, 0, 0}, {0, 1, 0, 1}},  // c = b - d = 0
        {"l9", {{0, 1, 0, 0}, {0, 0, 1, 1}}, {1, 0, 0, 0}, {0, 0, 1, -1}},
        {"l10", {{1, -1, 0, 0}, {0, 0, 1, 1}}, {1, 1, 0, 0}, {0, 0, 1, -1}},
        {"l11", {{1, -1, 0, 0}, {0, 1, 0, -1}}, {1, 1, 0, 1}, {0, 0, 1, 0}},
        {"l12", {{1, -1, 0, 0}, {0, 1, 1, 0}}, {1, 1, -1, 0}, {0, 0, 0, 1}},
        {"l13", {{1, 0, 1, 0}, {1, 0, 0, -1}}, {1, 0, -1, 1}, {0, 1, 0, 0}},
        {"l14", {{1, 0, 0, -1}, {0, 1, 1, 0}}, {1, 0, 0, 1}, {0, 1, -1, 0}},
    };
    return lines;
}

const std::array<std::array<int, 4>, 6>& singular_points() {
    static const std::array<std::array<int, 4>, 6> pts = {{
        {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -1, 1}, {1, 1, -1, 1},
    }};
    return pts;
}

template <class A, class B>
int dot(const A& x, const B& y) {
    int s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * y[i];
    return s;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

long long mod_norm(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

long long ec_count(const FqSpec& f) {
    // For fixed x: y^2 + x y - (x^3 - x^2 - 2x - 1) = 0.
    long long count = 1;
    const FqElem one = f.from_int(1LL), two = f.from_int(2LL);
    for (FqElem x : f.elements()) {
        FqElem x2 = f.mul(x, x), x3 = f.mul(x2, x);
        FqElem rhs = f.sub(f.sub(f.sub(x3, x2), f.mul(two, x)), one);
        count += quadratic_roots(f, one, x, f.neg(rhs));
    }
    return count;
}

Int a_coeff(int p, int n) {
    if (n < 0) throw std::invalid_argument("a_coeff needs n >= 0");
    if (!is_prime(p)) throw std::invalid_argument("a_coeff needs a prime");
    if (p > kMaxFieldSize) throw std::invalid_argument("a_coeff needs p <= 2^16");
    const Int ap = p + 1 - ec_count(FqSpec(p));
    // 7 is the bad prime (additive reduction): a_{7^k} = a_7^k and the Frobenius
    // power sums reduce to a_7^k as well.
    const Int pp = p == 7 ? 0 : p;
    Int c0 = 1, c1 = ap;  // a_{p^{k-1}}, a_{p^k}
    Int s0 = p == 7 ? 1 : 2, s1 = ap;  // power sums q^k + 1 - #E(F_{p^k})
    Int q = p;
    for (int k = 1;; ++k) {
        if (q <= (1 << 12) && s1 != q + 1 - ec_count(FqSpec(p, k)))
            throw std::logic_error("a_coeff: Frobenius trace mismatch at " + std::to_string(p) + "^" + std::to_string(k));
        if (k >= n) break;
        Int c2 = ap * c1 - pp * c0, s2 = ap * s1 - pp * s0;
        c0 = c1;
        c1 = c2;
        s0 = s1;
        s1 = s2;
        q *= p;
    }
    return n == 0 ? Int(1) : c1;
}

std::vector<long long> eta_coeffs(int n_max) {
    if (n_max < 0 || n_max > 100000) throw std::invalid_argument("eta_coeffs needs 0 <= n_max <= 10^5");
    // prod (1-q^k)^3 = sum_m (-1)^m (2m+1) q^{m(m+1)/2}.
    std::vector<std::pair<long long, long long>> jac;
    for (long long m = 0; m * (m + 1) / 2 <= n_max; ++m) jac.push_back({m * (m + 1) / 2, (m % 2 ? -1 : 1) * (2 * m + 1)});
    std::vector<long long> b(n_max + 1, 0);
    for (auto [e1, c1] : jac) {
        for (auto [e2, c2] : jac) {
            long long e = 1 + e1 + 7 * e2;
            if (e > n_max) break;
            b[e] += c1 * c2;
        }
    }
    return b;
}

std::vector<long long> f49_theta_coeffs(int n_max) {
    if (n_max < 0 || n_max > 10000) throw std::invalid_argument("f49_theta_coeffs needs 0 <= n_max <= 10^4");
    auto t714 = theta_series(7, 14, n_max);
    auto cube = mul_trunc(mul_trunc(t714, t714, n_max), t714, n_max);
    auto inner = shifted(theta_series(21, 28, n_max), 1, 1);
    auto second = shifted(theta_series(14, 35, n_max), 2, 1);
    auto third = shifted(theta_series(7, 42, n_max), 4, -1);
    for (int i = 0; i <= n_max; ++i) inner[i] += second[i] + third[i];
    return mul_trunc(cube, inner, n_max);
}

MultiPoly quartic_j() { return parse_poly("a^2*b*c - a*b - a*c^2 - a*c + b^2*c + a*b^2 + a*b*c^2 - a*b*c"); }

MultiPoly quartic_f() { return parse_poly("b*(a+c)*(a*c+b*d) - a*d*(b+c)*(c+d)"); }

long long quartic_count(Quartic which, const FqSpec& f) {
    if (f.q() > (1 << 13)) throw std::invalid_argument("quartic_count needs q <= 2^13");
    const auto els = f.elements();
    if (which == Quartic::J) {
        // J as a quadratic in a: (bc) a^2 + (b^2 + bc^2 - bc - b - c^2 - c) a + b^2 c.
        long long count = 0;
        for (FqElem b : els) {
            FqElem b2 = f.mul(b, b);
            for (FqElem c : els) {
                FqElem bc = f.mul(b, c), c2 = f.mul(c, c);
                FqElem B = f.sub(f.sub(f.sub(f.add(b2, f.mul(bc, c)), bc), f.add(b, c2)), c);
                count += quadratic_roots(f, bc, B, f.mul(b2, c));
            }
        }
        return count;
    }
    // F as a quadratic in d: -a(b+c) d^2 + (b^2(a+c) - ac(b+c)) d + abc(a+c).
    long long cone = 0;
    for (FqElem a : els)
        for (FqElem b : els)
            for (FqElem c : els) {
                FqElem bpc = f.add(b, c), apc = f.add(a, c), ac = f.mul(a, c);
                FqElem A = f.neg(f.mul(a, bpc));
                FqElem B = f.sub(f.mul(f.mul(b, b), apc), f.mul(ac, bpc));
                FqElem C = f.mul(f.mul(ac, b), apc);
                cone += quadratic_roots(f, A, B, C);
            }
    return (cone - 1) / (f.q() - 1);
}

const std::vector<std::vector<int>>& k3_intersection_matrix() {
    static const std::vector<std::vector<int>> m = {
        {-2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
        {0, -2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, -2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0},
        {0, 1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0, 0, 0, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -2, 0, 0, 1, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, 0, 0, 1, 0, 0, 0, 1},
        {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0, 0},
        {1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0},
        {1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0},
        {0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, -2},
    };
    return m;
}

std::uint64_t k3_matrix_checksum(const std::vector<std::vector<int>>& m) {
    std::ostringstream os;
    for (auto& row : m) {
        for (int x : row) os << x << ',';
        os << ';';
    }
    return fnv1a(os.str());
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
    // Bareiss fraction-free elimination with row swaps.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool K3Report::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

K3Report k3_checks() {
    K3Report rep;
    const MultiPoly F = quartic_f();

    std::array<MultiPoly, 4> grad;
    for (int v = 1; v <= 4; ++v) grad[v - 1] = derivative(F, v);
    const char* pnames[] = {"e1", "e2", "e3", "e4", "e5", "e6"};
    for (std::size_t i = 0; i < singular_points().size(); ++i) {
        const auto& pt = singular_points()[i];
        std::vector<Int> x(pt.begin(), pt.end());
        std::ostringstream os;
        bool ok = F.evaluate(x) == 0;
        os << "F=" << F.evaluate(x) << " grad=(";
        for (int v = 0; v < 4; ++v) {
            Int g = grad[v].evaluate(x);
            ok = ok && g == 0;
            os << g << (v < 3 ? "," : ")");
        }
        rep.items.push_back({std::string("singular ") + pnames[i], ok, os.str()});
    }

    // Lines as s*P + t*Q with s = a5, t = a6.
    for (const auto& l : line_fixtures()) {
        bool spans = true;
        for (auto& form : l.forms) spans = spans && dot(form, l.p) == 0 && dot(form, l.q) == 0;
        bool independent = false;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) independent = independent || l.p[i] * l.q[j] - l.p[j] * l.q[i] != 0;
        MultiPoly g = F;
        for (int v = 1; v <= 4; ++v)
            g = g.substitute(v, MultiPoly::var(5).scaled(l.p[v - 1]) + MultiPoly::var(6).scaled(l.q[v - 1]));
        bool ok = spans && independent && g.is_zero();
        std::string detail = !spans ? "spanning points violate the equations"
                             : !independent ? "spanning points are dependent"
                                            : "F restricted = " + g.to_string();
        rep.items.push_back({"line " + l.name, ok, detail});
    }

    const auto& m = k3_intersection_matrix();
    rep.checksum = k3_matrix_checksum(m);
    bool shape = m.size() == 20;
    for (std::size_t i = 0; i < m.size() && shape; ++i) {
        shape = m[i].size() == 20 && m[i][i] == -2;
        for (std::size_t j = 0; j < m.size() && shape; ++j) shape = m[i][j] == m[j][i];
    }
    rep.items.push_back({"matrix checksum", rep.checksum == kK3MatrixChecksum && shape,
                         shape ? "symmetric, diagonal -2" : "malformed fixture"});
    std::vector<std::vector<Int>> mi(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) mi[i].assign(m[i].begin(), m[i].end());
    Int det = integer_determinant(mi);
    rep.determinant = static_cast<long long>(det);
    rep.items.push_back({"determinant", det == -7, "det = " + det.str()});

    for (const auto& it : rep.items)
        if (!it.ok) throw std::runtime_error("k3 check failed: " + it.name + " (" + it.detail + ")");
    return rep;
}

bool CounterexampleReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const PrimeRow& r) { return r.ok; });
}

CounterexampleReport verify_counterexample(int p_max, bool with_graph, const CountOptions& opt) {
    if (p_max < 2 || p_max > 200) throw std::invalid_argument("counterexample needs 2 <= pmax <= 200");
    if (with_graph && p_max > 7) throw std::invalid_argument("the graph route needs pmax <= 7");
    CounterexampleReport rep;
    rep.p_max = p_max;
    rep.with_graph = with_graph;
    const auto primes = primes_up_to(p_max);
    const auto b = eta_coeffs(p_max);

    std::optional<ReductionTrace> trace;
    if (with_graph) {
        std::vector<int> order(16);
        for (int i = 0; i < 16; ++i) order[i] = i + 1;
        trace = denominator_reduce(graph_g8(), order);
    }

    auto check = [&](int p) {
        PrimeRow r;
        r.p = p;
        FqSpec f(p);
        r.a_p = p + 1 - ec_count(f);
        r.b_p = b[p];
        r.j_count = quartic_count(Quartic::J, f);
        r.f_count = quartic_count(Quartic::F, f);
        r.c2 = mod_norm(2 - r.j_count, p);
        r.minus_a2 = mod_norm(-r.a_p * r.a_p, p);
        r.minus_b = mod_norm(-r.b_p, p);
        r.f_mod = mod_norm(r.f_count, p);
        r.f_cone_mod = mod_norm(1 + (p - 1) * r.f_count, p);
        r.b_minus_a2 = r.b_p - r.a_p * r.a_p;
        std::vector<std::string> fails;
        if (r.c2 != r.minus_a2) fails.push_back("2-[J] != -a^2");
        if (r.minus_a2 != r.minus_b) fails.push_back("-a^2 != -b");
        if (r.f_cone_mod != r.minus_a2) fails.push_back("[F]_cone != -a^2");
        if (r.a_p * r.a_p > 4LL * p) fails.push_back("Hasse bound");
        const int res = p % 7;
        if ((res == 0 || res == 3 || res == 5 || res == 6) && r.a_p != 0) fails.push_back("a_p != 0 at an inert prime");
        if (res == 1 || res == 2 || res == 4) {
            long long rest = 4LL * p - r.a_p * r.a_p;
            if (rest >= 0 && rest % 7 == 0) {
                long long s = 0;
                while ((s + 1) * (s + 1) <= rest / 7) ++s;
                if (s * s == rest / 7) r.norm_b = s;
            }
            if (!r.norm_b) fails.push_back("4p != a^2 + 7b^2");
        }
        if (trace) {
            C2Value v = c2_denom(*trace, f, opt);
            r.graph_c2 = v.residue;
            if (v.residue != r.minus_a2) fails.push_back("c2_denom(G8) != -a^2");
        }
        r.ok = fails.empty();
        for (std::size_t i = 0; i < fails.size(); ++i) r.failure += (i ? "; " : "") + fails[i];
        return r;
    };

    const int jobs = std::max(1, opt.jobs);
    std::vector<std::future<PrimeRow>> pending;
    std::size_t next = 0;
    while (next < primes.size() || !pending.empty()) {
        while (next < primes.size() && static_cast<int>(pending.size()) < jobs)
            pending.push_back(std::async(std::launch::async, check, primes[next++]));
        rep.rows.push_back(pending.front().get());
        pending.erase(pending.begin());
    }
    std::sort(rep.rows.begin(), rep.rows.end(), [](const PrimeRow& x, const PrimeRow& y) { return x.p < y.p; });

    std::set<long long> residues;
    for (const auto& r : rep.rows) {
        const int res = r.p % 7;
        if ((res == 1 || res == 2 || res == 4) && r.a_p != 0) {
            rep.witness_primes.push_back(r.p);
            residues.insert(r.minus_a2);
        }
    }
    rep.witness_residues.assign(residues.begin(), residues.end());
    rep.witness_ok = !rep.witness_primes.empty() && rep.witness_residues.size() >= 3;
    return rep;
}

std::string k3_json(const K3Report& r) {
    nlohmann::ordered_json j;
    j["ok"] = r.ok();
    j["determinant"] = r.determinant;
    std::ostringstream os;
    os << std::hex << r.checksum;
    j["checksum"] = os.str();
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : r.items) j["items"].push_back({{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
    return j.dump(2);
}

std::string counterexample_json(const CounterexampleReport& r) {
    nlohmann::ordered_json j;
    j["pmax"] = r.p_max;
    j["with_graph"] = r.with_graph;
    j["ok"] = r.ok();
    j["primes"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json e;
        e["p"] = row.p;
        e["a_p"] = row.a_p;
        e["b_p"] = row.b_p;
        e["J"] = row.j_count;
        e["F"] = row.f_count;
        e["c2"] = row.c2;
        e["minus_a2"] = row.minus_a2;
        e["minus_b"] = row.minus_b;
        e["F_mod_p"] = row.f_mod;
        e["F_cone_mod_p"] = row.f_cone_mod;
        if (row.graph_c2) e["graph_c2"] = *row.graph_c2;
        if (row.norm_b) e["norm_b"] = *row.norm_b;
        e["b_minus_a2"] = row.b_minus_a2;
        e["ok"] = row.ok;
        if (!row.ok) e["failure"] = row.failure;
        j["primes"].push_back(e);
    }
    j["witness"] = {{"primes", r.witness_primes}, {"residues", r.witness_residues}, {"ok", r.witness_ok}};
    return j.dump(2);
}

}  // namespace c2lab
