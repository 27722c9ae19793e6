#include "doctest.h"

#include "c2lab/modular.hpp"
#include "c2lab/pointcount.hpp"
#include "support/oracles.hpp"

#include <numeric>
#include <random>

using namespace c2lab;

namespace {

// Affine points of the Weierstrass model by brute force over the schoolbook field.
long long brute_ec(const oracle::SmallField& f) {
    MultiPoly e = parse_poly("a2^2 + a1*a2 - a1^3 + a1^2 + 2*a1 + 1");
    long long n = 0;
    for (int x = 0; x < f.q; ++x)
        for (int y = 0; y < f.q; ++y) n += f.eval(e, {x, y}) == 0;
    return n + 1;
}

std::vector<long long> naive_eta(int n_max) {
    std::vector<long long> s(n_max + 1, 0);
    s[0] = 1;
    for (int k = 1; k <= n_max; ++k)
        for (int w : {k, 7 * k})
            for (int r = 0; r < 3 && w <= n_max; ++r)
                for (int i = n_max; i >= w; --i) s[i] -= s[i - w];
    std::vector<long long> b(n_max + 1, 0);
    for (int i = 1; i <= n_max; ++i) b[i] = s[i - 1];
    return b;
}

long long det_mod(std::vector<std::vector<long long>> m, long long p) {
    const int n = static_cast<int>(m.size());
    long long det = 1;
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    for (int c = 0; c < n; ++c) {
        int r = c;
        while (r < n && m[r][c] == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            std::swap(m[r], m[c]);
            det = (p - det) % p;
        }
        det = det * m[c][c] % p;
        long long inv = 1, b = m[c][c], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        for (int i = c + 1; i < n; ++i) {
            long long k = m[i][c] * inv % p;
            for (int j = c; j < n; ++j) m[i][j] = ((m[i][j] - k * m[c][j]) % p + p) % p;
        }
    }
    return det;
}

}  // namespace

TEST_CASE("ec_count examples") {
    CHECK(ec_count(FqSpec(2)) == 2);
    CHECK(ec_count(FqSpec(3)) == 4);
    CHECK(ec_count(FqSpec(11)) == 8);
    CHECK(11 + 1 - ec_count(FqSpec(11)) == 4);
}

TEST_CASE("ec_count matches brute force over small fields") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}}) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(ec_count(FqSpec(p, n)) == brute_ec(oracle::SmallField(p, n)));
    }
    for (int p = 17; p <= 47; ++p)
        if (is_prime(p)) CHECK(ec_count(FqSpec(p)) == brute_ec(oracle::SmallField(p, 1)));
}

TEST_CASE("Hasse bound and vanishing at inert primes") {
    for (int p = 2; p <= 400; ++p) {
        if (!is_prime(p)) continue;
        long long a = p + 1 - ec_count(FqSpec(p));
        CHECK(a * a <= 4LL * p);
        if (p == 7 || p % 7 == 3 || p % 7 == 5 || p % 7 == 6) CHECK(a == 0);
    }
}

TEST_CASE("a_coeff examples and Frobenius recursion") {
    CHECK(a_coeff(2, 0) == 1);
    CHECK(a_coeff(2, 1) == 1);
    CHECK(a_coeff(2, 2) == -1);
    CHECK(a_coeff(2, 3) == -3);
    CHECK(a_coeff(3, 2) == -3);
    // Internal cross-check against F_{p^n} counts runs for every p^n <= 2^12.
    CHECK_NOTHROW(a_coeff(2, 12));
    CHECK_NOTHROW(a_coeff(3, 7));
    CHECK_NOTHROW(a_coeff(7, 4));
    CHECK_NOTHROW(a_coeff(11, 3));
    CHECK(a_coeff(7, 3) == 0);
    CHECK_THROWS_AS(a_coeff(4, 1), std::invalid_argument);
}

TEST_CASE("eta product coefficients") {
    auto b = eta_coeffs(600);
    CHECK(b[0] == 0);
    CHECK(b[1] == 1);
    CHECK(b[2] == -3);
    CHECK(b[7] % 7 == 0);
    CHECK(b == naive_eta(600));
    CHECK(eta_coeffs(100000).size() == 100001);
    CHECK_THROWS_AS(eta_coeffs(100001), std::invalid_argument);
}

TEST_CASE("a_p^2 = b_p mod p for p <= 200") {
    auto b = eta_coeffs(200);
    for (int p = 2; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        long long a = p + 1 - ec_count(FqSpec(p));
        CHECK(((a * a - b[p]) % p + p) % p == 0);
    }
}

TEST_CASE("f49 theta expansion") {
    auto c = f49_theta_coeffs(1000);
    const std::vector<long long> head = {0, 1, 1, 0, -1, 0, 0, 0, -3, -3, 0, 4};
    for (std::size_t i = 0; i < head.size(); ++i) CHECK(c[i] == head[i]);
    CHECK(c[16] == -1);
    CHECK(c[18] == -3);
    CHECK(c[22] == 4);
    CHECK(c[23] == 8);
    for (int p = 2; p <= 1000; ++p) {
        if (!is_prime(p)) continue;
        long long q = p;
        for (int n = 1; q <= 1000; ++n, q *= p) {
            CAPTURE(q);
            CHECK(Int(c[q]) == a_coeff(p, n));
        }
    }
    for (int m = 2; m <= 1000; ++m)
        for (int n = m + 1; m * n <= 1000; ++n)
            if (std::gcd(m, n) == 1) CHECK(c[m * n] == c[m] * c[n]);
}

TEST_CASE("quartic J and F counts") {
    CHECK(quartic_count(Quartic::J, FqSpec(2)) == 7);
    const MultiPoly J = quartic_j(), F = quartic_f();
    CHECK(F.substitute(4, Int(1)) == J);
    for (int p : {2, 3, 5, 7, 11, 13}) {
        CAPTURE(p);
        CHECK(quartic_count(Quartic::J, FqSpec(p)) == oracle::brute_count({J}, p, 3));
    }
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        FqSpec f = FqSpec::of_size(q);
        CHECK(Int(quartic_count(Quartic::J, f)) == count_exhaustive({J}, f, 3));
        Int cone = count_exhaustive({F}, f, 4);
        CHECK(Int(quartic_count(Quartic::F, f)) == (cone - 1) / (q - 1));
    }
    CHECK_THROWS_AS(quartic_count(Quartic::J, FqSpec(8209)), std::invalid_argument);
}

TEST_CASE("projective F is J plus the four lines at d = 0") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47}) {
        FqSpec f = FqSpec::of_size(q);
        CHECK(quartic_count(Quartic::F, f) == quartic_count(Quartic::J, f) + 4 * q - 1);
    }
}

TEST_CASE("quartic congruences for p <= 50") {
    auto b = eta_coeffs(50);
    for (int p = 2; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        CAPTURE(p);
        FqSpec f(p);
        long long a = p + 1 - ec_count(f);
        long long j = quartic_count(Quartic::J, f), fp = quartic_count(Quartic::F, f);
        long long minus_a2 = ((-a * a) % p + p) % p;
        CHECK(((2 - j) % p + p) % p == minus_a2);
        CHECK(((1 + (p - 1) * fp) % p + p) % p == minus_a2);
        CHECK(((-b[p]) % p + p) % p == minus_a2);
    }
}

TEST_CASE("K3 fixture checks") {
    K3Report r = k3_checks();
    CHECK(r.ok());
    CHECK(r.determinant == -7);
    CHECK(r.items.size() == 6 + 14 + 2);
    CHECK(r.checksum == kK3MatrixChecksum);
    for (const auto& it : r.items)
        if (it.name == "singular e6") CHECK(it.detail == "F=0 grad=(0,0,0,0)");

    // e6 = (1:1:-1:1) by direct difference quotients of F.
    const MultiPoly F = quartic_f();
    std::vector<Int> e6 = {1, 1, -1, 1};
    for (int v = 0; v < 4; ++v) {
        auto plus = e6, minus = e6;
        plus[v] += 1;
        minus[v] -= 1;
        // F vanishes to order 2 at a singular point: F(e6 + t u) has no linear term in t.
        Int fp = F.evaluate(plus), fm = F.evaluate(minus);
        auto plus2 = e6, minus2 = e6;
        plus2[v] += 2;
        minus2[v] -= 2;
        Int f2p = F.evaluate(plus2), f2m = F.evaluate(minus2);
        // Linear coefficient of a quartic in t from values at t = -2..2.
        CHECK(8 * (fp - fm) - (f2p - f2m) == 0);
    }

    std::vector<Int> l1_point = {3, 5, 0, 0};
    CHECK(F.evaluate(l1_point) == 0);
}

TEST_CASE("intersection matrix determinant by modular elimination") {
    const auto& m = k3_intersection_matrix();
    std::vector<std::vector<long long>> ml(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) ml[i].assign(m[i].begin(), m[i].end());
    for (long long p : {1000003LL, 998244353LL, 1000000007LL}) CHECK(det_mod(ml, p) == p - 7);

    auto changed = m;
    changed[3][5] = 1;
    CHECK(k3_matrix_checksum(changed) != kK3MatrixChecksum);
}

TEST_CASE("integer determinant against Laplace expansion") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        std::vector<std::vector<MultiPoly>> mp(n, std::vector<MultiPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long v = (rng() % 3 == 0) ? 0 : static_cast<long long>(rng() % 11) - 5;
                m[i][j] = v;
                mp[i][j] = MultiPoly(v);
            }
        MultiPoly d = oracle::laplace_det(mp);
        CHECK(integer_determinant(m) == (d.is_zero() ? Int(0) : d.constant_value()));
    }
}

TEST_CASE("verify_counterexample") {
    CountOptions opt;
    opt.jobs = 4;
    auto r = verify_counterexample(50, false, opt);
    CHECK(r.ok());
    CHECK(r.rows.size() == 15);
    for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i - 1].p < r.rows[i].p);
    CHECK(r.rows[0].p == 2);
    CHECK(r.rows[0].c2 == 1);
    CHECK(r.rows[1].c2 == 0);
    for (const auto& row : r.rows)
        if (row.p == 11) CHECK(row.minus_a2 == 6);
    CHECK(r.witness_ok);
    CHECK(r.witness_residues.size() >= 3);

    opt.jobs = 1;
    CHECK(counterexample_json(verify_counterexample(50, false, opt)) == counterexample_json(r));

    auto big = verify_counterexample(200, false, opt);
    CHECK(big.ok());
    for (const auto& row : big.rows) {
        int res = row.p % 7;
        if (res == 1 || res == 2 || res == 4) CHECK(row.norm_b.has_value());
    }
    CHECK_THROWS_AS(verify_counterexample(201, false), std::invalid_argument);
    CHECK_THROWS_AS(verify_counterexample(11, true), std::invalid_argument);
}

TEST_CASE("counter-example through the G8 reduction chain") {
    auto r = verify_counterexample(7, true);
    CHECK(r.ok());
    for (const auto& row : r.rows) {
        REQUIRE(row.graph_c2.has_value());
        CHECK(*row.graph_c2 == row.minus_a2);
    }
}
