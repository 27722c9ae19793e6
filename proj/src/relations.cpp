#include "c2lab/relations.hpp"

#include <algorithm>
#include <climits>

namespace c2lab {

namespace {

std::vector<int> positions(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.edge_count() + 1, 0);
    if (order.empty()) {
        for (int e = 1; e <= g.edge_count(); ++e) pos[e] = e;
    } else {
        for (std::size_t i = 0; i < order.size(); ++i) pos.at(order[i]) = static_cast<int>(i) + 1;
    }
    return pos;
}

int far_end(const Graph& g, int e, int v) {
    const Edge& ed = g.edge(e);
    return ed.u == v ? ed.v : ed.u;
}

// Three distinct non-loop edges at a vertex of degree 3.
bool is_simple_trivalent(const Graph& g, int v, std::vector<int>& edges) {
    if (g.degree(v) != 3) return false;
    edges = g.incident_edges(v);
    if (edges.size() != 3) return false;
    for (int e : edges)
        if (g.edge(e).is_loop()) return false;
    return true;
}

}  // namespace

std::optional<SplitVertex> find_split_vertex(const Graph& g, const std::vector<int>& order) {
    if (g.is_zero()) return std::nullopt;
    auto pos = positions(g, order);
    std::optional<SplitVertex> best;
    int best_score = INT_MAX;
    for (int c = 1; c <= g.edge_count(); ++c) {
        const Edge& ec = g.edge(c);
        if (ec.is_loop()) continue;
        for (int flip = 0; flip < 2; ++flip) {
            int x = flip ? ec.v : ec.u, y = flip ? ec.u : ec.v;
            std::vector<int> ex, ey;
            if (!is_simple_trivalent(g, x, ex) || !is_simple_trivalent(g, y, ey)) continue;
            ex.erase(std::find(ex.begin(), ex.end(), c));
            ey.erase(std::find(ey.begin(), ey.end(), c));
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    int b = ex[i], a = ex[1 - i], d = ey[j], e = ey[1 - j];
                    int v2 = far_end(g, b, x);
                    if (far_end(g, d, y) != v2) continue;
                    int v1 = far_end(g, a, x), v3 = far_end(g, e, y);
                    if (v1 == v2 || v2 == v3 || v1 == v3) continue;
                    if (v1 == y || v2 == y || v3 == x || v2 == x) continue;
                    int score = std::max({pos[a], pos[b], pos[c], pos[d], pos[e]});
                    if (score < best_score) {
                        best_score = score;
                        best = SplitVertex{a, b, c, d, e};
                    }
                }
            }
        }
    }
    return best;
}

std::optional<SplitTriangle> find_split_triangle(const Graph& g, const std::vector<int>& order) {
    if (g.is_zero()) return std::nullopt;
    auto pos = positions(g, order);
    std::optional<SplitTriangle> best;
    int best_score = INT_MAX;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<int> es;
        if (!is_simple_trivalent(g, v, es)) continue;
        int far[3] = {far_end(g, es[0], v), far_end(g, es[1], v), far_end(g, es[2], v)};
        if (far[0] == far[1] || far[1] == far[2] || far[0] == far[2]) continue;
        for (int mid = 0; mid < 3; ++mid) {
            int i1 = (mid + 1) % 3, i3 = (mid + 2) % 3;
            int v1 = far[i1], v2 = far[mid], v3 = far[i3];
            auto joining = [&](int p, int q) {
                int found = 0;
                for (int e = 1; e <= g.edge_count(); ++e) {
                    const Edge& ed = g.edge(e);
                    if ((ed.u == p && ed.v == q) || (ed.u == q && ed.v == p))
                        if (!found || pos[e] < pos[found]) found = e;
                }
                return found;
            };
            int e4 = joining(v1, v2), e5 = joining(v2, v3);
            if (!e4 || !e5) continue;
            int score = std::max({pos[es[i1]], pos[es[mid]], pos[es[i3]], pos[e4], pos[e5]});
            if (score < best_score) {
                best_score = score;
                best = SplitTriangle{es[i1], es[mid], es[i3], e4, e5};
            }
        }
    }
    return best;
}

}  // namespace c2lab
