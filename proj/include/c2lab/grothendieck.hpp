#pragma once

#include "c2lab/graph.hpp"
#include "c2lab/lpoly.hpp"
#include "c2lab/multipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace c2lab {

// Raised when a class computation reaches a configuration none of its rules cover.
class UnreducedCase : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Class of V(system) in affine space of dimension `ambient` by linear
// reductions, substitutions and factor splits over Z. Throws UnreducedCase
// when no rule applies or when a non-unit constant would make the answer
// depend on the characteristic.
LPoly class_of(const std::vector<MultiPoly>& system, int ambient);

// Series-parallel reduction; nullopt when the graph is not fully reducible.
std::optional<LPoly> sp_class(const Graph& g);

// <G>_{e1,e2,e3} = [f0,f1,f2,f3,f123] in affine space of dimension N-3.
LPoly vertex_bracket(const Graph& g, int e1, int e2, int e3);

struct Vw3Stats {
    int psi_calls = 0, bracket_calls = 0, memo_hits = 0;
    int series_parallel = 0, split_vertex = 0, split_triangle = 0;
    int edge_split = 0, triangle = 0, base_cases = 0;
};

// Class of Psi_G for an ordering certifying vertex-width <= 3.
LPoly vw3_class(const Graph& g, const std::vector<int>& ordering, Vw3Stats* stats = nullptr);

enum class Family { W, Z, B, Zbar, What, Zhat };
Family parse_family(const std::string& name);
std::string family_name(Family f);
// n-th class by the direct recurrences.
LPoly family_class(Family f, int n);

enum class Series { B, What, W, Zgen, Z, Zbar, Zhat };
Series parse_series(const std::string& name);
std::string series_name(Series s);
RationalSeries generating_series(Series s);
// Coefficients 0..n_max; n_max <= 64.
std::vector<LPoly> series_coeffs(Series s, int n_max);

}  // namespace c2lab
