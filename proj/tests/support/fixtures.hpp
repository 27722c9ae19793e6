#pragma once
// Graph fixtures shared by the unit tests and the acceptance binary.

#include "c2lab/graph.hpp"
#include "c2lab/kirchhoff.hpp"
#include "c2lab/multipoly.hpp"
#include "c2lab/reduction.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixture {

using c2lab::Edge;
using c2lab::Graph;
using c2lab::MultiPoly;

// Minor of g with its polynomials pulled back to g's edge labels.
struct Lifted {
    Graph graph;
    std::vector<int> to_minor;  // g label -> minor label, 0 if removed
    std::vector<int> back;      // minor label -> g label

    Lifted(const Graph& g, const std::vector<int>& del, const std::vector<int>& con) {
        c2lab::Minor m = c2lab::minor(g, del, con);
        graph = m.graph;
        to_minor = m.index_map;
        back.assign(c2lab::kMaxVars + 1, 0);
        for (int e = 1; e < static_cast<int>(to_minor.size()); ++e)
            if (to_minor[e]) back[to_minor[e]] = e;
    }
    std::vector<int> local(std::vector<int> es) const {
        for (int& e : es) e = to_minor.at(e);
        return es;
    }
    MultiPoly dodgson(const std::vector<int>& I, const std::vector<int>& J, const std::vector<int>& K = {}) const {
        return c2lab::dodgson(graph, local(I), local(J), local(K)).rename(back);
    }
    MultiPoly psi() const { return dodgson({}, {}); }
};

// The G8 pipeline in the natural order 1..16, with edge labels of G8 throughout.
struct G8Lemmas {
    c2lab::ReductionTrace trace;
    MultiPoly d6_product;   // Psi_H^{1,5} Psi^5_{H,1}, H = G\{2,4}//{3,6}
    MultiPoly d10_product;  // Psi^{15,78}_A Psi_B
    MultiPoly a_del, a_con, b_del, b_con;  // the four entries of the D11 determinant
    MultiPoly d11_det;
};

inline G8Lemmas g8_lemmas() {
    G8Lemmas r;
    Graph g = c2lab::graph_g8();
    std::vector<int> order;
    for (int e = 1; e <= 16; ++e) order.push_back(e);
    r.trace = c2lab::denominator_reduce(g, order);
    Lifted h(g, {2, 4}, {3, 6});
    r.d6_product = h.dodgson({1}, {5}) * h.dodgson({5}, {5}, {1});
    // A = H\{10}//9 and B = H\{5,7,9}//{1,8,10}, taken directly as minors of G.
    Lifted a(g, {2, 4, 10}, {3, 6, 9});
    Lifted b(g, {2, 4, 5, 7, 9}, {3, 6, 1, 8, 10});
    MultiPoly pa = a.dodgson({1, 5}, {7, 8});
    MultiPoly pb = b.psi();
    r.d10_product = pa * pb;
    r.a_del = pa.coefficient_of(11, 1);
    r.a_con = pa.coefficient_of(11, 0);
    r.b_del = pb.coefficient_of(11, 1);
    r.b_con = pb.coefficient_of(11, 0);
    r.d11_det = r.a_del * r.b_con - r.a_con * r.b_del;
    return r;
}

// Double-triangle configuration A=1 B=2 C=3 D=4 X=5 Y=6 as edges 1..7
// (AX, XY, YD, XB, XC, YB, YC) plus random attachments on A..D and up to two
// extra vertices.
inline Graph double_triangle_instance(std::mt19937& rng) {
    int extra = static_cast<int>(rng() % 3);
    int v = 6 + extra;
    std::vector<Edge> e{{1, 5}, {5, 6}, {4, 6}, {2, 5}, {3, 5}, {2, 6}, {3, 6}};
    std::vector<int> outer{1, 2, 3, 4};
    for (int k = 7; k <= v; ++k) outer.push_back(k);
    auto any = [&] { return outer[rng() % outer.size()]; };
    for (int k = 7; k <= v; ++k) {
        int w = outer[rng() % (k - 3)];
        e.push_back({std::min(w, k), std::max(w, k)});
    }
    int more = 2 + static_cast<int>(rng() % 4);
    while (more > 0) {
        int a = any(), b = any();
        if (a == b) continue;
        e.push_back({std::min(a, b), std::max(a, b)});
        --more;
    }
    return Graph(v, e);
}

}  // namespace fixture
