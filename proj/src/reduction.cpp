#include "c2lab/reduction.hpp"

#include "c2lab/kirchhoff.hpp"

#include <algorithm>
#include "json.hpp"
#include <stdexcept>

namespace c2lab {

MultiPoly five_invariant(const Graph& g, const std::array<int, 5>& e) {
    std::vector<int> s(e.begin(), e.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("five_invariant: repeated edge");
    for (int x : s)
        if (x < 1 || x > g.edge_count()) throw std::out_of_range("five_invariant: invalid edge index");
    const int i = e[0], j = e[1], k = e[2], l = e[3], m = e[4];
    MultiPoly f = dodgson(g, {i, j}, {k, l});
    MultiPoly h = dodgson(g, {i, k}, {j, l});
    return resultant_linear(f, h, m).sign_normalized();
}

StepResult denom_step(const MultiPoly& d, int var) {
    if (d.degree_in(var) > 2) throw std::invalid_argument("denom_step: degree > 2 in " + variable_name(var));
    StepResult r;
    r.a = d.coefficient_of(var, 2);
    r.b = d.coefficient_of(var, 1);
    r.c = d.coefficient_of(var, 0);
    r.delta = r.b * r.b - MultiPoly(4) * r.a * r.c;
    if (d.is_zero() || r.delta.is_zero()) {
        r.kind = StepResult::Kind::Zero;
        return r;
    }
    auto root = poly_sqrt(r.delta);
    if (!root) {
        r.kind = StepResult::Kind::Irreducible;
        return r;
    }
    r.kind = StepResult::Kind::Root;
    r.value = root->sign_normalized();
    return r;
}

const MultiPoly& ReductionTrace::at(int n) const {
    for (auto& s : steps)
        if (s.n == n) return s.poly;
    throw std::out_of_range("trace has no D^" + std::to_string(n));
}

namespace {

std::vector<int> complete_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.edge_count();
    std::vector<char> seen(n + 1, 0);
    std::vector<int> out;
    for (int e : order) {
        if (e < 1 || e > n) throw std::out_of_range("reduction order: invalid edge index " + std::to_string(e));
        if (seen[e]) throw std::invalid_argument("reduction order: repeated edge " + std::to_string(e));
        seen[e] = 1;
        out.push_back(e);
    }
    for (int e = 1; e <= n; ++e)
        if (!seen[e]) out.push_back(e);
    return out;
}

ReductionTrace seed(const Graph& g, const std::vector<int>& order) {
    if (g.is_zero() || !g.is_connected()) throw std::invalid_argument("denominator reduction needs a connected graph");
    if (g.edge_count() < 5) throw std::invalid_argument("denominator reduction needs N >= 5");
    if (order.size() < 5) throw std::invalid_argument("denominator reduction needs at least five ordered edges");
    ReductionTrace t;
    t.graph = g;
    t.order = complete_order(g, order);
    ReductionStep s;
    s.n = 5;
    s.poly = five_invariant(g, {t.order[0], t.order[1], t.order[2], t.order[3], t.order[4]});
    t.steps.push_back(s);
    return t;
}

// Applies one step on `var`; returns false when the trace has terminated.
bool advance(ReductionTrace& t, int var, const StepResult& r) {
    ReductionStep s;
    s.n = t.last_n() + 1;
    s.variable = var;
    s.a = r.a;
    s.b = r.b;
    s.c = r.c;
    if (r.kind == StepResult::Kind::Irreducible) {
        t.status = ReductionStatus::Irreducible;
        t.stopped_at = t.last_n();
        return false;
    }
    s.poly = r.kind == StepResult::Kind::Zero ? MultiPoly(0) : r.value;
    s.root = s.poly;
    t.steps.push_back(s);
    if (s.poly.is_zero()) {
        t.status = ReductionStatus::WeightDrop;
        return false;
    }
    return true;
}

}  // namespace

ReductionTrace denominator_reduce(const Graph& g, const std::vector<int>& order) {
    ReductionTrace t = seed(g, order);
    const int n = g.edge_count();
    if (t.last().is_zero()) {
        t.status = ReductionStatus::WeightDrop;
        return t;
    }
    while (t.last_n() < n - 1) {
        int var = t.order[t.last_n()];
        if (!advance(t, var, denom_step(t.last(), var))) return t;
    }
    t.status = ReductionStatus::FullyReduced;
    return t;
}

ReductionTrace denominator_reduce_auto(const Graph& g, const std::vector<int>& first) {
    if (first.size() != 5) throw std::invalid_argument("auto reduction takes exactly five initial edges");
    ReductionTrace t = seed(g, first);
    const int n = g.edge_count();
    t.order.resize(5);
    if (t.last().is_zero()) {
        t.status = ReductionStatus::WeightDrop;
        t.order = complete_order(g, t.order);
        return t;
    }
    while (t.last_n() < n - 1) {
        std::vector<char> used(n + 1, 0);
        for (int e : t.order) used[e] = 1;
        bool moved = false;
        std::optional<std::pair<int, StepResult>> zero;
        for (int v = 1; v <= n && !moved; ++v) {
            if (used[v]) continue;
            StepResult r = denom_step(t.last(), v);
            if (r.kind == StepResult::Kind::Root) {
                t.order.push_back(v);
                advance(t, v, r);
                moved = true;
            } else if (r.kind == StepResult::Kind::Zero && !zero) {
                zero.emplace(v, r);
            }
        }
        if (moved) continue;
        if (zero) {
            t.order.push_back(zero->first);
            advance(t, zero->first, zero->second);
        } else {
            t.status = ReductionStatus::Irreducible;
            t.stopped_at = t.last_n();
        }
        t.order = complete_order(g, t.order);
        return t;
    }
    t.status = ReductionStatus::FullyReduced;
    t.order = complete_order(g, t.order);
    return t;
}

std::string status_name(ReductionStatus s) {
    switch (s) {
        case ReductionStatus::FullyReduced: return "FULLY_REDUCED";
        case ReductionStatus::WeightDrop: return "WEIGHT_DROP";
        case ReductionStatus::Irreducible: return "IRREDUCIBLE_AT";
    }
    return "?";
}

std::string trace_json(const ReductionTrace& t) {
    nlohmann::ordered_json j;
    j["edges"] = t.graph.edge_count();
    j["order"] = t.order;
    std::string status = status_name(t.status);
    if (t.status == ReductionStatus::Irreducible) status += "(" + std::to_string(t.stopped_at) + ")";
    j["status"] = status;
    j["steps"] = nlohmann::ordered_json::array();
    for (auto& s : t.steps) {
        nlohmann::ordered_json e;
        e["n"] = s.n;
        e["variable"] = s.variable ? variable_name(s.variable) : std::string();
        e["status"] = s.poly.is_zero() ? "ZERO" : "OK";
        e["polynomial"] = s.poly.to_string();
        e["terms"] = s.poly.size();
        j["steps"].push_back(e);
    }
    return j.dump(2);
}

}  // namespace c2lab
