#pragma once
// Seeded property suites over random small graphs. Each suite draws graphs
// until `instances` of them carry the structure it needs, or gives up after
// 50 * instances draws.

#include "c2lab/multipoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace c2lab {

struct SuiteResult {
    std::string name;
    int checked = 0;   // instances that carried the structure
    int failures = 0;  // instances with at least one failed assertion
    std::string first_failure;
    bool ok(int want) const { return failures == 0 && checked >= want; }
};

// lhs == s1*x + s2*y for some signs s1, s2.
bool signed_sum_matches(const MultiPoly& lhs, const MultiPoly& x, const MultiPoly& y);

SuiteResult run_contraction_deletion(int instances, std::uint64_t seed);
SuiteResult run_first_dodgson(int instances, std::uint64_t seed);
SuiteResult run_second_dodgson(int instances, std::uint64_t seed);
SuiteResult run_vertex_vanishing(int instances, std::uint64_t seed);
SuiteResult run_loop_vanishing(int instances, std::uint64_t seed);
// 2-valent vertices and doubled edges.
SuiteResult run_two_edge_local(int instances, std::uint64_t seed);
SuiteResult run_local_star(int instances, std::uint64_t seed);
SuiteResult run_local_triangle(int instances, std::uint64_t seed);
SuiteResult run_five_invariant_symmetry(int instances, std::uint64_t seed);
SuiteResult run_triangle_split(int instances, std::uint64_t seed);
SuiteResult run_star_split(int instances, std::uint64_t seed);
// Random systems with total degree below the dimension, and graph polynomials.
SuiteResult run_chevalley_warning(int instances, std::uint64_t seed);
// c2_direct == c2_dodgson == -[5-invariant] mod q for random edges, q in {2, 3}.
SuiteResult run_five_invariant_c2(int instances, std::uint64_t seed);

// Every suite above, in declaration order.
std::vector<SuiteResult> run_all_suites(int instances, std::uint64_t seed);

}  // namespace c2lab
