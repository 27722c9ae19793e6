#pragma once

#include "c2lab/field.hpp"
#include "c2lab/multipoly.hpp"
#include "c2lab/pointcount.hpp"

#include <optional>
#include <string>
#include <vector>

namespace c2lab {

// Projective points of y^2 + xy = x^3 - x^2 - 2x - 1 over F_q, including infinity.
long long ec_count(const FqSpec& f);

// a_{p^n} by the Frobenius recursion. For p^n <= 2^12 every a_{p^k}, k <= n, is
// checked against ec_count over F_{p^k}; a mismatch throws std::logic_error.
Int a_coeff(int p, int n);

// b[0..n_max] of q prod (1-q^k)^3 (1-q^{7k})^3; b[0] = 0. n_max <= 10^5.
std::vector<long long> eta_coeffs(int n_max);

// c[0..n_max] of theta_{7,14}^3 (q theta_{21,28} + q^2 theta_{14,35} - q^4 theta_{7,42}).
// n_max <= 10^4.
std::vector<long long> f49_theta_coeffs(int n_max);

enum class Quartic { J, F };

// Polynomials in a1..a4 (a, b, c, d).
MultiPoly quartic_j();
MultiPoly quartic_f();

// [J] in A^3 or [F] in P^3; q <= 2^13. The affine cone of F has 1 + (q-1)[F] points.
long long quartic_count(Quartic which, const FqSpec& f);

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct K3Report {
    std::vector<CheckItem> items;
    long long determinant = 0;
    std::uint64_t checksum = 0;
    bool ok() const;
};

// Throws std::runtime_error naming the first failing item.
K3Report k3_checks();

// Hardcoded 20x20 intersection matrix of l1..l20 and its stored checksum.
const std::vector<std::vector<int>>& k3_intersection_matrix();
std::uint64_t k3_matrix_checksum(const std::vector<std::vector<int>>& m);
constexpr std::uint64_t kK3MatrixChecksum = 0x4728423d15877dffULL;

Int integer_determinant(std::vector<std::vector<Int>> m);

struct PrimeRow {
    int p = 0;
    long long a_p = 0;
    long long b_p = 0;
    long long j_count = 0;
    long long f_count = 0;
    long long c2 = 0;        // 2 - [J]_p mod p
    long long minus_a2 = 0;  // -a_p^2 mod p
    long long minus_b = 0;   // -b_p mod p
    long long f_mod = 0;       // projective [F]_p mod p
    long long f_cone_mod = 0;  // affine cone count 1 + (p-1)[F]_p mod p
    std::optional<long long> graph_c2;  // c2_denom on the G8 trace
    std::optional<long long> norm_b;    // b >= 0 with 4p = a_p^2 + 7 b^2
    long long b_minus_a2 = 0;           // b_p - a_p^2, reported only
    bool ok = false;
    std::string failure;
};

struct CounterexampleReport {
    int p_max = 0;
    bool with_graph = false;
    std::vector<PrimeRow> rows;  // sorted by p
    std::vector<int> witness_primes;        // p = 1,2,4 mod 7 with a_p != 0
    std::vector<long long> witness_residues;  // distinct -a_p^2 mod p over witness_primes, sorted
    bool witness_ok = false;
    bool ok() const;
};

// p_max <= 200, or <= 7 with the graph route.
CounterexampleReport verify_counterexample(int p_max, bool with_graph, const CountOptions& opt = {});

std::string k3_json(const K3Report& r);
std::string counterexample_json(const CounterexampleReport& r);

}  // namespace c2lab
