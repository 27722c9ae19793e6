#include "c2lab/kirchhoff.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace c2lab {

GraphMatrix build_matrix(const Graph& g) {
    if (g.is_zero()) throw std::invalid_argument("build_matrix: zero graph");
    if (!g.is_connected()) throw std::invalid_argument("build_matrix: disconnected graph");
    GraphMatrix m;
    const int n = g.edge_count();
    const int kept = g.vertex_count() - 1;
    m.edge_count = n;
    m.deleted_vertex = g.vertex_count();
    m.entries.assign(n + kept, std::vector<MultiPoly>(n + kept));
    for (int e = 1; e <= n; ++e) {
        m.entries[e - 1][e - 1] = MultiPoly::var(e);
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        if (ed.u <= kept) {
            m.entries[e - 1][n + ed.u - 1] = MultiPoly(1);
            m.entries[n + ed.u - 1][e - 1] = MultiPoly(-1);
        }
        if (ed.v <= kept) {
            m.entries[e - 1][n + ed.v - 1] = MultiPoly(-1);
            m.entries[n + ed.v - 1][e - 1] = MultiPoly(1);
        }
    }
    return m;
}

namespace {

bool is_unit(const MultiPoly& p) {
    return p.size() == 1 && p.leading().mono.is_one() && (p.leading().coef == 1 || p.leading().coef == -1);
}

MultiPoly subset_expansion(const std::vector<std::vector<MultiPoly>>& m) {
    const int k = static_cast<int>(m.size());
    std::unordered_map<std::uint32_t, MultiPoly> cur{{0u, MultiPoly(1)}};
    for (int r = 0; r < k; ++r) {
        std::unordered_map<std::uint32_t, MultiPoly> next;
        for (auto& [mask, val] : cur) {
            for (int j = 0; j < k; ++j) {
                if (mask >> j & 1) continue;
                if (m[r][j].is_zero()) continue;
                int above = __builtin_popcount(mask >> (j + 1));
                MultiPoly t = m[r][j] * val;
                if (above & 1) t = -t;
                auto [it, fresh] = next.try_emplace(mask | (1u << j), std::move(t));
                if (!fresh) it->second += t;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) it = next.erase(it);
            else ++it;
        }
        cur = std::move(next);
        if (cur.empty()) return MultiPoly(0);
    }
    auto it = cur.find(k == 32 ? ~0u : (1u << k) - 1);
    return it == cur.end() ? MultiPoly(0) : it->second;
}

MultiPoly bareiss(std::vector<std::vector<MultiPoly>> m) {
    const int k = static_cast<int>(m.size());
    int sign = 1;
    MultiPoly prev(1);
    for (int s = 0; s < k - 1; ++s) {
        int best = -1;
        std::size_t best_size = 0;
        for (int i = s; i < k; ++i)
            if (!m[i][s].is_zero() && (best < 0 || m[i][s].size() < best_size)) {
                best = i;
                best_size = m[i][s].size();
            }
        if (best < 0) return MultiPoly(0);
        if (best != s) {
            std::swap(m[best], m[s]);
            sign = -sign;
        }
        for (int i = s + 1; i < k; ++i) {
            for (int j = s + 1; j < k; ++j) {
                MultiPoly t = m[s][s] * m[i][j] - m[i][s] * m[s][j];
                m[i][j] = t.divide_exact(prev);
            }
            m[i][s] = MultiPoly(0);
        }
        prev = m[s][s];
    }
    MultiPoly d = k ? m[k - 1][k - 1] : MultiPoly(1);
    return sign < 0 ? -d : d;
}

}  // namespace

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
    const int n = static_cast<int>(m.size());
    for (auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant: matrix not square");
    std::vector<char> row_alive(n, 1), col_alive(n, 1);
    int sign = 1;
    int active = n;
    // Pivot on constant +-1 entries while any remain (no division needed).
    while (active > 0) {
        std::vector<int> row_nz(n, 0), col_nz(n, 0);
        for (int i = 0; i < n; ++i) {
            if (!row_alive[i]) continue;
            for (int j = 0; j < n; ++j)
                if (col_alive[j] && !m[i][j].is_zero()) {
                    ++row_nz[i];
                    ++col_nz[j];
                }
        }
        int pr = -1, pc = -1;
        long best = -1;
        for (int i = 0; i < n; ++i) {
            if (!row_alive[i]) continue;
            if (row_nz[i] == 0) return MultiPoly(0);
            for (int j = 0; j < n; ++j) {
                if (!col_alive[j] || !is_unit(m[i][j])) continue;
                long cost = static_cast<long>(row_nz[i] - 1) * (col_nz[j] - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        int rpos = 0, cpos = 0;
        for (int i = 0; i < pr; ++i) rpos += row_alive[i];
        for (int j = 0; j < pc; ++j) cpos += col_alive[j];
        const bool neg_pivot = m[pr][pc].leading().coef < 0;
        if ((rpos + cpos) % 2) sign = -sign;
        if (neg_pivot) sign = -sign;
        for (int i = 0; i < n; ++i) {
            if (!row_alive[i] || i == pr || m[i][pc].is_zero()) continue;
            MultiPoly factor = neg_pivot ? -m[i][pc] : m[i][pc];
            for (int j = 0; j < n; ++j) {
                if (!col_alive[j] || j == pc || m[pr][j].is_zero()) continue;
                m[i][j] -= factor * m[pr][j];
            }
        }
        row_alive[pr] = 0;
        col_alive[pc] = 0;
        --active;
    }
    std::vector<std::vector<MultiPoly>> rest;
    std::vector<int> rows, cols;
    for (int i = 0; i < n; ++i)
        if (row_alive[i]) rows.push_back(i);
    for (int j = 0; j < n; ++j)
        if (col_alive[j]) cols.push_back(j);
    // Sparse rows first for the subset expansion.
    std::vector<int> perm(rows.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    auto nnz = [&](int r) {
        int c = 0;
        for (int j : cols) c += !m[r][j].is_zero();
        return c;
    };
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return nnz(rows[a]) < nnz(rows[b]); });
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    for (int pi : perm) {
        std::vector<MultiPoly> row;
        row.reserve(cols.size());
        for (int j : cols) row.push_back(std::move(m[rows[pi]][j]));
        rest.push_back(std::move(row));
    }
    MultiPoly d = rest.size() <= 20 ? subset_expansion(rest) : bareiss(std::move(rest));
    return sign < 0 ? -d : d;
}

MultiPoly graph_polynomial(const Graph& g) {
    if (g.is_zero() || !g.is_connected()) return MultiPoly(0);
    return determinant(build_matrix(g).entries);
}

namespace {

void check_edges(const Graph& g, const std::vector<int>& s, const char* what) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw std::invalid_argument(std::string("dodgson: repeated edge in ") + what);
    for (int e : t)
        if (e < 1 || e > g.edge_count()) throw std::out_of_range(std::string("dodgson: invalid edge index in ") + what);
}

}  // namespace

MultiPoly dodgson(const Graph& g, const std::vector<int>& I, const std::vector<int>& J, const std::vector<int>& K) {
    if (I.size() != J.size()) throw std::invalid_argument("dodgson: |I| != |J|");
    check_edges(g, I, "I");
    check_edges(g, J, "J");
    check_edges(g, K, "K");
    for (int k : K)
        if (std::count(I.begin(), I.end(), k) || std::count(J.begin(), J.end(), k))
            throw std::invalid_argument("dodgson: K must be disjoint from I and J");
    if (g.is_zero() || !g.is_connected()) return MultiPoly(0);
    GraphMatrix gm = build_matrix(g);
    for (int k : K) gm.entries[k - 1][k - 1] = MultiPoly(0);
    std::vector<char> drop_row(gm.size(), 0), drop_col(gm.size(), 0);
    for (int i : I) drop_row[i - 1] = 1;
    for (int j : J) drop_col[j - 1] = 1;
    std::vector<std::vector<MultiPoly>> sub;
    for (int i = 0; i < gm.size(); ++i) {
        if (drop_row[i]) continue;
        std::vector<MultiPoly> row;
        for (int j = 0; j < gm.size(); ++j)
            if (!drop_col[j]) row.push_back(std::move(gm.entries[i][j]));
        sub.push_back(std::move(row));
    }
    return determinant(std::move(sub));
}

int three_valent_vertex(const Graph& g, int e1, int e2, int e3) {
    if (g.is_zero()) return 0;
    std::vector<int> want{e1, e2, e3};
    std::sort(want.begin(), want.end());
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) != 3) continue;
        auto inc = g.incident_edges(v);
        if (inc == want) {
            bool loop = false;
            for (int e : inc) loop |= g.edge(e).is_loop();
            if (!loop) return v;
        }
    }
    return 0;
}

VertexStructure three_valent_structure(const Graph& g, int e1, int e2, int e3) {
    if (!three_valent_vertex(g, e1, e2, e3)) throw std::invalid_argument("three_valent_structure: edges do not form a 3-valent vertex");
    VertexStructure s;
    s.f0 = dodgson(g, {e1, e2}, {e1, e2}, {e3});
    s.f123 = dodgson(g, {}, {}, {e1, e2, e3});
    MultiPoly f1 = dodgson(g, {e2}, {e3}, {e1});
    MultiPoly f2 = dodgson(g, {e1}, {e3}, {e2});
    MultiPoly f3 = dodgson(g, {e1}, {e2}, {e3});
    MultiPoly psi = graph_polynomial(g);
    MultiPoly a1 = MultiPoly::var(e1), a2 = MultiPoly::var(e2), a3 = MultiPoly::var(e3);
    MultiPoly quad = s.f0 * (a1 * a2 + a1 * a3 + a2 * a3) + s.f123;
    for (int mask = 0; mask < 8; ++mask) {
        MultiPoly g1 = (mask & 1) ? -f1 : f1;
        MultiPoly g2 = (mask & 2) ? -f2 : f2;
        MultiPoly g3 = (mask & 4) ? -f3 : f3;
        if (quad + (g1 + g2) * a3 + (g1 + g3) * a2 + (g2 + g3) * a1 == psi) {
            if (s.f0 * s.f123 != g1 * g2 + g1 * g3 + g2 * g3)
                throw std::logic_error("three_valent_structure: f0*f123 != f1f2+f1f3+f2f3");
            s.f1 = g1;
            s.f2 = g2;
            s.f3 = g3;
            return s;
        }
    }
    throw std::logic_error("three_valent_structure: no sign choice satisfies the vertex structure");
}

}  // namespace c2lab
