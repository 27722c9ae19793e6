#include "c2lab/canon.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace c2lab {

namespace {

using Matrix = std::vector<std::vector<int>>;

struct Search {
    int n = 0;
    Matrix mult;  // 1-based; diagonal holds loop counts
    std::optional<std::string> best;
    std::vector<int> best_order;

    // Equitable refinement: colors become ranks of (color, neighbour colour multiset).
    std::vector<int> refine(std::vector<int> color) const {
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> sig(n + 1);
            for (int v = 1; v <= n; ++v) {
                std::vector<int> s{color[v], mult[v][v]};
                std::vector<std::pair<int, int>> nb;
                for (int w = 1; w <= n; ++w)
                    if (w != v && mult[v][w]) nb.push_back({color[w], mult[v][w]});
                std::sort(nb.begin(), nb.end());
                for (auto& [c, m] : nb) {
                    s.push_back(c);
                    s.push_back(m);
                }
                sig[v] = {std::move(s), v};
            }
            std::map<std::vector<int>, int> rank;
            for (int v = 1; v <= n; ++v) rank[sig[v].first] = 0;
            int r = 0;
            for (auto& [k, val] : rank) val = r++;
            std::vector<int> next(n + 1, 0);
            for (int v = 1; v <= n; ++v) next[v] = rank[sig[v].first];
            int before = static_cast<int>(std::set<int>(color.begin() + 1, color.end()).size());
            if (r == before) return next;
            color = std::move(next);
        }
    }

    std::string certificate(const std::vector<int>& order) const {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s.push_back(static_cast<char>(mult[order[i]][order[j]] + 1));
        return s;
    }

    void run(const std::vector<int>& color) {
        std::vector<int> c = refine(color);
        // Smallest non-singleton cell.
        std::map<int, std::vector<int>> cells;
        for (int v = 1; v <= n; ++v) cells[c[v]].push_back(v);
        const std::vector<int>* target = nullptr;
        for (auto& [k, cell] : cells)
            if (cell.size() > 1 && (!target || cell.size() < target->size())) target = &cell;
        if (!target) {
            std::vector<int> order(n);
            for (int v = 1; v <= n; ++v) order[c[v]] = v;
            std::string cert = certificate(order);
            if (!best || cert < *best) {
                best = std::move(cert);
                best_order = order;
            }
            return;
        }
        std::vector<int> cell = *target;
        for (int v : cell) {
            std::vector<int> c2 = c;
            // Split v off its cell, placing it first.
            for (int w = 1; w <= n; ++w) c2[w] = 2 * c[w] + 1;
            c2[v] = 2 * c[v];
            run(c2);
        }
    }
};

Search build(const Graph& g, int marked) {
    Search s;
    s.n = g.vertex_count();
    s.mult.assign(s.n + 1, std::vector<int>(s.n + 1, 0));
    for (auto& e : g.edges()) {
        if (e.is_loop()) {
            ++s.mult[e.u][e.u];
        } else {
            ++s.mult[e.u][e.v];
            ++s.mult[e.v][e.u];
        }
    }
    std::vector<int> color(s.n + 1, 0);
    for (int v = 1; v <= s.n; ++v) color[v] = (v == marked ? 0 : 1);
    s.run(color);
    return s;
}

}  // namespace

std::string canonical_certificate(const Graph& g, int marked) {
    if (g.is_zero()) return "Z" + std::to_string(g.edge_count());
    Search s = build(g, marked);
    std::string head = "G" + std::to_string(g.vertex_count()) + "/" + std::to_string(g.edge_count());
    if (marked) head += "*" + std::to_string(std::find(s.best_order.begin(), s.best_order.end(), marked) - s.best_order.begin());
    return head + ":" + *s.best;
}

std::vector<int> canonical_order(const Graph& g, int marked) {
    if (g.is_zero()) return {};
    return build(g, marked).best_order;
}

bool isomorphic(const Graph& a, const Graph& b) { return canonical_certificate(a) == canonical_certificate(b); }

}  // namespace c2lab
