#pragma once
// Class relations for split vertices, split triangles and the vertex bracket,
// written over a value type V that is either LPoly (symbolic) or Int (L = q).

#include "c2lab/graph.hpp"
#include "c2lab/lpoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace c2lab {

// G' contains vertices x (edges a,b,c) and y (edges c,d,e), c joining them;
// b and d end at a common vertex v2, a ends at v1, e ends at v3, all distinct.
struct SplitVertex {
    int a, b, c, d, e;
};

// Vertex v with edges e1,e2,e3 to distinct v1,v2,v3; edge e4 joins v1 and v2,
// edge e5 joins v2 and v3.
struct SplitTriangle {
    int e1, e2, e3, e4, e5;
};

// Configurations among edges of g, tried in order of the largest position in `order`.
std::optional<SplitVertex> find_split_vertex(const Graph& g, const std::vector<int>& order);
std::optional<SplitTriangle> find_split_triangle(const Graph& g, const std::vector<int>& order);

template <class V>
V lpow(const V& L, int e) {
    if (e < 0) throw std::invalid_argument("negative power of L");
    V r(1);
    for (int i = 0; i < e; ++i) r = r * L;
    return r;
}

inline LPoly divide_by_L(const LPoly& x, const LPoly& L) { return x.divide_exact(L); }
inline Int divide_by_L(const Int& x, const Int& L) {
    if (x % L != 0) throw std::domain_error("value not divisible by q");
    return x / L;
}

namespace rel {

inline Minor sub(const Graph& g, const std::vector<int>& del, const std::vector<int>& con) { return minor(g, del, con); }

// Edge index after a minor; throws if the edge was removed.
inline int at(const Minor& m, int e) {
    int r = m.index_map.at(e);
    if (r == 0) throw std::logic_error("edge removed by minor");
    return r;
}

}  // namespace rel

// [Psi_{G'}] from the split-vertex relation with G = G' \ d // c.
// psi(H) is the class of Psi_H in A^{N_H}; bracket(H, x, y, z) is <H>_{x,y,z}.
template <class V, class Psi, class Bracket>
V split_vertex_class(const Graph& gp, const SplitVertex& s, Psi&& psi, Bracket&& bracket, const V& L) {
    Minor m = rel::sub(gp, {s.d}, {s.c});
    const Graph& g = m.graph;
    const int g1 = rel::at(m, s.a), g2 = rel::at(m, s.b), g3 = rel::at(m, s.e);
    const int n = g.edge_count();
    V br = bracket(g, g1, g2, g3);
    V psi_g = psi(g);
    V psi_g2 = psi(rel::sub(g, {}, {g2}).graph);
    V psi_13_2 = psi(rel::sub(g, {g1, g3}, {g2}).graph);
    V L2 = L * L;
    return (lpow(L, 5) - lpow(L, 4)) * br + lpow(L, n - 2) * (lpow(L, 3) + L - V(1)) - (L - L2) * (psi_g2 - psi_13_2) -
           (L - V(1)) * psi_g;
}

// [Psi_{G'}] from the split-triangle relation with G = G' \ {4,5},
// H = G' \ {1,3} // 2 and the triangle T = G' \ 2 // 3.
template <class V, class Psi, class Bracket>
V split_triangle_class(const Graph& gp, const SplitTriangle& s, Psi&& psi, Bracket&& bracket, const V& L) {
    Minor mg = rel::sub(gp, {s.e4, s.e5}, {});
    V br = bracket(mg.graph, rel::at(mg, s.e1), rel::at(mg, s.e2), rel::at(mg, s.e3));

    Minor mh = rel::sub(gp, {s.e1, s.e3}, {s.e2});
    const Graph& h = mh.graph;
    const int h4 = rel::at(mh, s.e4), h5 = rel::at(mh, s.e5);
    Minor mt = rel::sub(gp, {s.e2}, {s.e3});
    const Graph& t = mt.graph;
    const int t1 = rel::at(mt, s.e1), t4 = rel::at(mt, s.e4), t5 = rel::at(mt, s.e5);

    auto P = [&](const Graph& x, const std::vector<int>& del, const std::vector<int>& con) {
        return psi(rel::sub(x, del, con).graph);
    };
    V lhs_rest = P(gp, {s.e4}, {}) + P(gp, {s.e5}, {}) + P(gp, {s.e4, s.e5}, {});
    lhs_rest += L * (psi(h) + P(h, {h4}, {}) + P(h, {h5}, {}) + P(h, {h4, h5}, {}) + P(t, {t4}, {t1}) + P(t, {t4, t5}, {t1}));
    lhs_rest -= (lpow(L, 3) - lpow(L, 2)) *
                (P(h, {}, {h4}) + P(h, {}, {h5}) + P(h, {h4}, {h5}) + P(h, {h5}, {h4}) + P(h, {}, {h4, h5}));
    const int tri[3] = {t1, t4, t5};
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> del;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) del.push_back(tri[i]);
        lhs_rest -= P(t, del, {});
    }
    V rhs = (lpow(L, 5) - lpow(L, 4)) * br + (lpow(L, 4) + V(3) * lpow(L, 2) - L - V(1)) * lpow(L, h.edge_count() - 2);
    return rhs - lhs_rest;
}

// <G_s> = L <G_s // e4> when the far end of vertex edge e3 is 2-valent with other edge e4.
template <class V, class Bracket>
V edge_split_bracket(const Graph& gs, int e1, int e2, int e3, int e4, Bracket&& bracket, const V& L) {
    Minor m = rel::sub(gs, {}, {e4});
    return L * bracket(m.graph, rel::at(m, e1), rel::at(m, e2), rel::at(m, e3));
}

// Edges e1,e2 of the vertex and e4 form a triangle; G = G' \ e4.
// L <G'> = (L^2 - L) <G> + [Psi_{G,12}] + [Psi^3_{G,12}] - L^{N_G-3}.
template <class V, class Psi, class Bracket>
V triangle_bracket(const Graph& gp, int e1, int e2, int e3, int e4, Psi&& psi, Bracket&& bracket, const V& L) {
    Minor m = rel::sub(gp, {e4}, {});
    const Graph& g = m.graph;
    const int g1 = rel::at(m, e1), g2 = rel::at(m, e2), g3 = rel::at(m, e3);
    V br = bracket(g, g1, g2, g3);
    V a = psi(rel::sub(g, {}, {g1, g2}).graph);
    V b = psi(rel::sub(g, {g3}, {g1, g2}).graph);
    V total = (L * L - L) * br + a + b - lpow(L, g.edge_count() - 3);
    return divide_by_L(total, L);
}

}  // namespace c2lab
