#pragma once

#include "c2lab/graph.hpp"
#include "c2lab/multipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace c2lab {

// Sign-normalized resultant [Psi^{ij,kl}, Psi^{ik,jl}]_m for edges (i,j,k,l,m).
MultiPoly five_invariant(const Graph& g, const std::array<int, 5>& edges);

struct StepResult {
    enum class Kind { Root, Zero, Irreducible };
    Kind kind = Kind::Irreducible;
    MultiPoly value;  // sqrt(B^2-4AC), sign-normalized; zero for Kind::Zero
    MultiPoly a, b, c, delta;
};

// D = A v^2 + B v + C. Throws std::invalid_argument when deg_v D > 2.
StepResult denom_step(const MultiPoly& d, int var);

enum class ReductionStatus { FullyReduced, WeightDrop, Irreducible };

struct ReductionStep {
    int n = 0;         // D^n
    int variable = 0;  // variable eliminated to reach D^n (0 for D^5)
    MultiPoly poly;
    MultiPoly a, b, c, root;  // witnesses of the step producing D^n
};

struct ReductionTrace {
    Graph graph;
    std::vector<int> order;
    std::vector<ReductionStep> steps;  // D^5, D^6, ...
    ReductionStatus status = ReductionStatus::Irreducible;
    int stopped_at = 0;  // for Irreducible: the n at which no root existed

    int last_n() const { return steps.empty() ? 0 : steps.back().n; }
    const MultiPoly& last() const { return steps.back().poly; }
    const MultiPoly& at(int n) const;
};

// `order` may be a prefix (at least five edges); remaining edges follow in index order.
ReductionTrace denominator_reduce(const Graph& g, const std::vector<int>& order);
// Greedy: after the given first five edges, eliminate any remaining variable whose step has a root.
ReductionTrace denominator_reduce_auto(const Graph& g, const std::vector<int>& first);

std::string status_name(ReductionStatus s);
std::string trace_json(const ReductionTrace& t);

}  // namespace c2lab
