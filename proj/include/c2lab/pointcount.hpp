#pragma once

#include "c2lab/field.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/multipoly.hpp"
#include "c2lab/reduction.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace c2lab {

struct CountOptions {
    int threshold = 6;      // enumerate systems with at most this many variables
    double budget = 2e11;   // cap on estimated enumeration work (term updates)
    int jobs = 1;           // worker threads for the outermost enumerated variable
    std::string cache_dir;  // persistent count cache; empty disables it
};

class CostError : public std::runtime_error {
public:
    CostError(double estimate, double budget);
    double estimate;
};

// #{x in F_q^ambient_dim : all polynomials vanish}. ambient_dim must be at
// least the number of distinct variables occurring in the system; variables
// absent from the system range freely over the remaining coordinates.
Int count_affine(const std::vector<MultiPoly>& system, const FqSpec& f, int ambient_dim, const CountOptions& opt = {});

// Plain exhaustive enumeration (no algebraic reduction); used as a reference route.
Int count_exhaustive(const std::vector<MultiPoly>& system, const FqSpec& f, int ambient_dim, const CountOptions& opt = {});

enum class C2Route { Direct, Dodgson, Denom };
std::string route_name(C2Route r);

struct C2Value {
    int q = 0;
    long long residue = 0;   // in Z/q
    long long mod_p = 0;     // residue mod the characteristic
    Int count;               // the underlying point count
    C2Route route = C2Route::Direct;
    double seconds = 0;
};

C2Value c2_direct(const Graph& g, const FqSpec& f, const CountOptions& opt = {});
C2Value c2_dodgson(const Graph& g, const FqSpec& f, const std::array<int, 3>& edges, const CountOptions& opt = {});
C2Value c2_denom(const ReductionTrace& t, const FqSpec& f, const CountOptions& opt = {});

// Stable 64-bit FNV-1a digest used for cache file names.
std::uint64_t fnv1a(const std::string& s);

}  // namespace c2lab
