#include "c2lab/checks.hpp"

#include "c2lab/field.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/kirchhoff.hpp"
#include "c2lab/pointcount.hpp"
#include "c2lab/reduction.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace c2lab {

bool signed_sum_matches(const MultiPoly& lhs, const MultiPoly& x, const MultiPoly& y) {
    return lhs == x + y || lhs == x - y || lhs == y - x || lhs == -(x + y);
}

namespace {

using Rng = std::mt19937_64;
using Set = std::vector<int>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Connected loopless multigraph.
Graph random_graph(Rng& rng, int min_v, int max_v, int max_extra) {
    int v = uniform(rng, min_v, max_v);
    int n = v - 1 + uniform(rng, 1, max_extra);
    std::vector<Edge> e;
    for (int k = 2; k <= v; ++k) e.push_back({uniform(rng, 1, k - 1), k});
    while (static_cast<int>(e.size()) < n) {
        int a = uniform(rng, 1, v), b = uniform(rng, 1, v);
        if (a == b) continue;
        e.push_back({std::min(a, b), std::max(a, b)});
    }
    std::shuffle(e.begin(), e.end(), rng);
    return Graph(v, std::move(e));
}

// k distinct elements of 1..n outside `avoid`; false when fewer are available.
bool pick(Rng& rng, int n, int k, const Set& avoid, Set& out) {
    Set pool;
    for (int e = 1; e <= n; ++e)
        if (std::find(avoid.begin(), avoid.end(), e) == avoid.end()) pool.push_back(e);
    if (static_cast<int>(pool.size()) < k) return false;
    std::shuffle(pool.begin(), pool.end(), rng);
    out.assign(pool.begin(), pool.begin() + k);
    return true;
}

Set join(Set a, const Set& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string set_text(const Set& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i]);
    return t + "}";
}

// Dodgson polynomial of the minor G\del//con, written in the variables of G.
MultiPoly minor_dodgson(const Graph& g, const Set& del, const Set& con, const Set& I, const Set& J, const Set& K) {
    Minor m = minor(g, del, con);
    std::vector<int> back(kMaxVars + 1, 0);
    for (int e = 1; e <= g.edge_count(); ++e)
        if (m.index_map[e]) back[m.index_map[e]] = e;
    auto local = [&](const Set& s) {
        Set r;
        for (int e : s) r.push_back(m.index_map.at(e));
        return r;
    };
    return dodgson(m.graph, local(I), local(J), local(K)).rename(back);
}

struct Tracker {
    SuiteResult r;
    std::string context;
    bool failed = false;
    void expect(bool cond, const std::string& what) {
        if (cond || failed) return;
        failed = true;
        if (r.first_failure.empty()) r.first_failure = what + " on " + context;
    }
    void finish_instance() {
        ++r.checked;
        if (failed) ++r.failures;
        failed = false;
    }
};

std::string graph_line(const Graph& g) {
    std::ostringstream s;
    for (const Edge& e : g.edges()) s << e.u << e.v << ' ';
    return s.str();
}

// Runs `body` on fresh graphs; body returns false when the graph lacks the structure.
SuiteResult drive(const std::string& name, int instances, std::uint64_t seed,
                  const std::function<Graph(Rng&)>& draw, const std::function<bool(Rng&, const Graph&, Tracker&)>& body) {
    Rng rng(seed);
    Tracker t;
    t.r.name = name;
    for (int draws = 0; t.r.checked < instances && draws < 50 * instances; ++draws) {
        Graph g = draw(rng);
        t.context = "graph [" + graph_line(g) + "]";
        if (body(rng, g, t)) t.finish_instance();
    }
    return t.r;
}

Graph small_graph(Rng& rng) { return random_graph(rng, 3, 6, 5); }

// Vertex whose incident edges are k distinct non-loop edges.
bool find_vertex(Rng& rng, const Graph& g, int k, Set& edges) {
    Set vs(g.vertex_count());
    std::iota(vs.begin(), vs.end(), 1);
    std::shuffle(vs.begin(), vs.end(), rng);
    for (int v : vs) {
        if (g.degree(v) != k) continue;
        Set inc = g.incident_edges(v);
        if (static_cast<int>(inc.size()) != k) continue;
        edges = inc;
        std::shuffle(edges.begin(), edges.end(), rng);
        return true;
    }
    return false;
}

bool find_triangle(Rng& rng, const Graph& g, Set& edges) {
    const int n = g.edge_count();
    Set order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (int e1 : order)
        for (int e2 : order) {
            if (e2 == e1) continue;
            const Edge &a = g.edge(e1), &b = g.edge(e2);
            int shared = (a.u == b.u || a.u == b.v) ? a.u : (a.v == b.u || a.v == b.v) ? a.v : 0;
            if (!shared) continue;
            int x = a.u == shared ? a.v : a.u, y = b.u == shared ? b.v : b.u;
            if (x == y) continue;
            for (int e3 : order) {
                if (e3 == e1 || e3 == e2) continue;
                const Edge& c = g.edge(e3);
                if ((c.u == std::min(x, y) && c.v == std::max(x, y))) {
                    edges = {e1, e2, e3};
                    return true;
                }
            }
        }
    return false;
}

bool find_doubled(Rng& rng, const Graph& g, Set& edges) {
    const int n = g.edge_count();
    Set order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (int e1 : order)
        for (int e2 : order)
            if (e1 != e2 && g.edge(e1) == g.edge(e2)) {
                edges = {e1, e2};
                return true;
            }
    return false;
}

// Edges of a cycle: a random spanning forest plus one non-forest edge.
bool find_cycle(Rng& rng, const Graph& g, Set& cycle) {
    const int n = g.edge_count();
    Set order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> parent(g.vertex_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    Set tree;
    int extra = 0;
    for (int e : order) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) {
            if (!extra) extra = e;
            continue;
        }
        parent[a] = b;
        tree.push_back(e);
    }
    if (!extra) return false;
    // Path in the tree between the endpoints of `extra`.
    const int target = g.edge(extra).v;
    Set path;
    std::vector<char> used(n + 1, 0);
    std::function<bool(int)> dfs = [&](int v) {
        if (v == target) return true;
        for (int e : tree) {
            if (used[e]) continue;
            const Edge& ed = g.edge(e);
            if (ed.u != v && ed.v != v) continue;
            used[e] = 1;
            path.push_back(e);
            if (dfs(ed.u == v ? ed.v : ed.u)) return true;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(g.edge(extra).u)) return false;
    cycle = path;
    cycle.push_back(extra);
    return true;
}

const std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

SuiteResult run_contraction_deletion(int instances, std::uint64_t seed) {
    return drive("contraction-deletion", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        int e = uniform(rng, 1, n);
        int s = uniform(rng, 0, std::min(2, n - 1));
        Set I, J, K;
        if (!pick(rng, n, s, {e}, I) || !pick(rng, n, s, {e}, J)) return false;
        pick(rng, n, uniform(rng, 0, 2), join(join(I, J), {e}), K);
        t.context += " e=" + std::to_string(e) + " I=" + set_text(I) + " J=" + set_text(J) + " K=" + set_text(K);
        MultiPoly f = dodgson(g, I, J, K);
        t.expect(f.degree_in(e) <= 1, "linearity");
        MultiPoly top = f.coefficient_of(e, 1), bottom = f.coefficient_of(e, 0);
        t.expect(top.same_up_to_sign(dodgson(g, join(I, {e}), join(J, {e}), K)), "coefficient of a_e");
        t.expect(top.same_up_to_sign(minor_dodgson(g, {e}, {}, I, J, K)), "deletion");
        t.expect(bottom == dodgson(g, I, J, join(K, {e})), "constant term");
        t.expect(bottom.same_up_to_sign(minor_dodgson(g, {}, {e}, I, J, K)), "contraction");
        t.expect(dodgson(g, I, I, K) == minor_dodgson(g, I, K, {}, {}, {}), "Psi^{I,I}_K = Psi of the minor");
        return true;
    });
}

SuiteResult run_first_dodgson(int instances, std::uint64_t seed) {
    return drive("first Dodgson identity", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set I, J, K, ax, b;
        int s = uniform(rng, 0, 1);
        if (!pick(rng, n, s, {}, I) || !pick(rng, n, s, {}, J)) return false;
        pick(rng, n, uniform(rng, 0, 1), join(I, J), K);
        Set used = join(join(I, J), K);
        if (!pick(rng, n, 2, used, ax)) return false;
        // b may coincide with a.
        if (uniform(rng, 0, 3) == 0) b = {ax[0]};
        else if (!pick(rng, n, 1, join(used, {ax[1]}), b)) return false;
        int a = ax[0], x = ax[1], bb = b[0];
        t.context += " I=" + set_text(I) + " J=" + set_text(J) + " K=" + set_text(K) + " a,b,x=" + std::to_string(a) +
                     "," + std::to_string(bb) + "," + std::to_string(x);
        MultiPoly lhs = resultant_linear(dodgson(g, I, J, K), dodgson(g, join(I, {a}), join(J, {bb}), K), x);
        MultiPoly rhs = dodgson(g, join(I, {x}), join(J, {bb}), K) * dodgson(g, join(I, {a}), join(J, {x}), K);
        t.expect(lhs.same_up_to_sign(rhs), "first Dodgson identity");
        return true;
    });
}

SuiteResult run_second_dodgson(int instances, std::uint64_t seed) {
    return drive("second Dodgson identity", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set I, J, K, abx;
        int s = uniform(rng, 0, 1);
        if (!pick(rng, n, s, {}, I) || !pick(rng, n, s + 1, {}, J)) return false;
        pick(rng, n, uniform(rng, 0, 1), join(I, J), K);
        if (!pick(rng, n, 3, join(join(I, J), K), abx)) return false;
        int a = abx[0], b = abx[1], x = abx[2];
        t.context += " I=" + set_text(I) + " J=" + set_text(J) + " K=" + set_text(K) + " a,b,x=" + set_text(abx);
        MultiPoly lhs = resultant_linear(dodgson(g, join(I, {a}), J, K), dodgson(g, join(I, {b}), J, K), x);
        MultiPoly rhs = dodgson(g, join(I, {x}), J, K) * dodgson(g, join(I, {a, b}), join(J, {x}), K);
        t.expect(lhs.same_up_to_sign(rhs), "second Dodgson identity");
        return true;
    });
}

SuiteResult run_vertex_vanishing(int instances, std::uint64_t seed) {
    return drive("vanishing for vertices", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        int v = uniform(rng, 1, g.vertex_count());
        Set E = g.incident_edges(v);
        if (E.empty() || static_cast<int>(E.size()) > n - 1) return false;
        Set extra, other, K;
        pick(rng, n, uniform(rng, 0, 1), E, extra);
        Set I = join(E, extra);
        if (!pick(rng, n, static_cast<int>(I.size()), {}, other)) return false;
        pick(rng, n, uniform(rng, 0, 1), join(I, other), K);
        t.context += " vertex " + std::to_string(v) + " I=" + set_text(I) + " J=" + set_text(other) + " K=" + set_text(K);
        t.expect(dodgson(g, I, other, K).is_zero(), "E in I");
        t.expect(dodgson(g, other, I, K).is_zero(), "E in J");
        return true;
    });
}

SuiteResult run_loop_vanishing(int instances, std::uint64_t seed) {
    return drive("vanishing for loops", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set E;
        if (!find_cycle(rng, g, E)) return false;
        Set EI, EK;
        for (int e : E) (uniform(rng, 0, 1) ? EI : EK).push_back(e);
        Set extraI, extraK, J;
        pick(rng, n, uniform(rng, 0, 1), E, extraI);
        Set I = join(EI, extraI);
        pick(rng, n, uniform(rng, 0, 1), join(E, I), extraK);
        Set K = join(EK, extraK);
        // J avoids K and E cap I.
        if (!pick(rng, n, static_cast<int>(I.size()), join(K, EI), J)) return false;
        t.context += " cycle " + set_text(E) + " I=" + set_text(I) + " J=" + set_text(J) + " K=" + set_text(K);
        t.expect(dodgson(g, I, J, K).is_zero(), "E in I+K");
        t.expect(dodgson(g, J, I, K).is_zero(), "E in J+K");
        return true;
    });
}

SuiteResult run_two_edge_local(int instances, std::uint64_t seed) {
    return drive("local 2-valent vertex / doubled edge", instances, seed, small_graph,
                 [](Rng& rng, const Graph& g, Tracker& t) {
                     const int n = g.edge_count();
                     Set p;
                     bool vertex = uniform(rng, 0, 1) == 0;
                     if (vertex ? !find_vertex(rng, g, 2, p) : !find_doubled(rng, g, p)) {
                         vertex = !vertex;
                         if (vertex ? !find_vertex(rng, g, 2, p) : !find_doubled(rng, g, p)) return false;
                     }
                     const int e1 = p[0], e2 = p[1];
                     t.context += (vertex ? " 2-valent " : " doubled ") + set_text(p);
                     if (vertex) t.expect(dodgson(g, {e1, e2}, {e1, e2}).is_zero(), "Psi^{12} = 0");
                     else t.expect(dodgson(g, {}, {}, {e1, e2}).is_zero(), "Psi_{12} = 0");
                     MultiPoly m = dodgson(g, {e1}, {e2});
                     t.expect(m.same_up_to_sign(dodgson(g, {e1}, {e1}, {e2})), "Psi^{1,2} = Psi^1_2");
                     t.expect(m.same_up_to_sign(dodgson(g, {e2}, {e2}, {e1})), "Psi^{1,2} = Psi^2_1");
                     Set I, J, K;
                     int s = uniform(rng, 0, 1);
                     if (!pick(rng, n, s, p, I) || !pick(rng, n, s, p, J)) return true;
                     pick(rng, n, uniform(rng, 0, 1), join(p, join(I, J)), K);
                     t.context += " I=" + set_text(I) + " J=" + set_text(J) + " K=" + set_text(K);
                     MultiPoly big = dodgson(g, join({e1}, I), join({e2}, J), K);
                     t.expect(big.same_up_to_sign(minor_dodgson(g, {e1}, {e2}, I, J, K)), "G\\1//2");
                     t.expect(big.same_up_to_sign(minor_dodgson(g, {e2}, {e1}, I, J, K)), "G\\2//1");
                     return true;
                 });
}

SuiteResult run_local_star(int instances, std::uint64_t seed) {
    return drive("local star", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set s;
        if (!find_vertex(rng, g, 3, s)) return false;
        t.context += " star " + set_text(s);
        t.expect(dodgson(g, s, s).is_zero(), "Psi^{123} = 0");
        MultiPoly p12 = dodgson(g, {s[0], s[1]}, {s[0], s[1]}, {s[2]});
        t.expect(p12 == dodgson(g, {s[0], s[2]}, {s[0], s[2]}, {s[1]}), "Psi^{12}_3 = Psi^{13}_2");
        t.expect(p12 == dodgson(g, {s[1], s[2]}, {s[1], s[2]}, {s[0]}), "Psi^{12}_3 = Psi^{23}_1");
        for (auto& pm : kPerms) {
            int a = s[pm[0]], b = s[pm[1]], c = s[pm[2]];
            t.expect(dodgson(g, {a, b}, {b, c}).same_up_to_sign(dodgson(g, {a, b}, {a, b}, {c})), "Psi^{ab,bc} = Psi^{ab}_c");
            t.expect(signed_sum_matches(dodgson(g, {a}, {a}, {b, c}), dodgson(g, {a}, {c}, {b}), dodgson(g, {a}, {b}, {c})),
                     "Psi^a_{bc} = Psi^{a,c}_b + Psi^{a,b}_c");
        }
        Set ij;
        if (!pick(rng, n, 2, s, ij)) return true;
        const int i = ij[0], j = ij[1];
        t.context += " i,j=" + set_text(ij);
        for (auto& pm : kPerms) {
            int a = s[pm[0]], b = s[pm[1]], c = s[pm[2]];
            t.expect(dodgson(g, {a, b, c}, {a, i, j}).is_zero(), "Psi^{abc,aij} = 0");
            MultiPoly lhs = dodgson(g, {a, c, i}, {b, c, j});
            for (auto& pm2 : kPerms) {
                int a2 = s[pm2[0]], b2 = s[pm2[1]], c2 = s[pm2[2]];
                t.expect(lhs.same_up_to_sign(minor_dodgson(g, {a2, b2}, {c2}, {i}, {j}, {})), "Psi^{aci,bcj}");
            }
        }
        return true;
    });
}

SuiteResult run_local_triangle(int instances, std::uint64_t seed) {
    return drive("local triangle", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set s;
        if (!find_triangle(rng, g, s)) return false;
        t.context += " triangle " + set_text(s);
        t.expect(dodgson(g, {}, {}, s).is_zero(), "Psi_{123} = 0");
        MultiPoly p1 = dodgson(g, {s[0]}, {s[0]}, {s[1], s[2]});
        t.expect(p1 == dodgson(g, {s[1]}, {s[1]}, {s[0], s[2]}), "Psi^1_{23} = Psi^2_{13}");
        t.expect(p1 == dodgson(g, {s[2]}, {s[2]}, {s[0], s[1]}), "Psi^1_{23} = Psi^3_{12}");
        for (auto& pm : kPerms) {
            int a = s[pm[0]], b = s[pm[1]], c = s[pm[2]];
            t.expect(dodgson(g, {a}, {b}, {c}).same_up_to_sign(dodgson(g, {a}, {a}, {b, c})), "Psi^{a,b}_c = Psi^a_{bc}");
            t.expect(signed_sum_matches(dodgson(g, {a, b}, {a, b}, {c}), dodgson(g, {a, b}, {a, c}), dodgson(g, {a, b}, {b, c})),
                     "Psi^{ab}_c = Psi^{ab,ac} + Psi^{ab,bc}");
        }
        Set ij;
        if (!pick(rng, n, 2, s, ij)) return true;
        const int i = ij[0], j = ij[1];
        t.context += " i,j=" + set_text(ij);
        for (auto& pm : kPerms) {
            int a = s[pm[0]], b = s[pm[1]], c = s[pm[2]];
            t.expect(dodgson(g, {a, b}, {i, j}, {c}).is_zero(), "Psi^{ab,ij}_c = 0");
            MultiPoly lhs = dodgson(g, {a, i}, {b, j}, {c});
            for (auto& pm2 : kPerms) {
                int a2 = s[pm2[0]], b2 = s[pm2[1]], c2 = s[pm2[2]];
                t.expect(lhs.same_up_to_sign(minor_dodgson(g, {a2}, {b2, c2}, {i}, {j}, {})), "Psi^{ai,bj}_c");
            }
        }
        return true;
    });
}

SuiteResult run_five_invariant_symmetry(int instances, std::uint64_t seed) {
    auto draw = [](Rng& rng) { return random_graph(rng, 4, 6, 5); };
    return drive("5-invariant permutation invariance", instances, seed, draw, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set e;
        if (!pick(rng, n, 5, {}, e)) return false;
        t.context += " edges " + set_text(e);
        MultiPoly base = five_invariant(g, {e[0], e[1], e[2], e[3], e[4]});
        for (int v = 1; v <= n; ++v) t.expect(base.degree_in(v) <= 2, "degree <= 2");
        for (int k = 0; k < 3; ++k) {
            std::shuffle(e.begin(), e.end(), rng);
            t.expect(five_invariant(g, {e[0], e[1], e[2], e[3], e[4]}) == base, "permuted " + set_text(e));
        }
        return true;
    });
}

SuiteResult run_triangle_split(int instances, std::uint64_t seed) {
    return drive("5-invariant triangle split", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set s, ij;
        if (!find_triangle(rng, g, s) || !pick(rng, n, 2, s, ij)) return false;
        const int a = s[0], b = s[1], c = s[2], i = ij[0], j = ij[1];
        t.context += " triangle " + set_text(s) + " i,j=" + set_text(ij);
        MultiPoly lhs = five_invariant(g, {a, b, c, i, j});
        MultiPoly rhs = minor_dodgson(g, {a}, {b, c}, {i}, {j}, {}) * dodgson(g, {a, b, c}, {c, i, j});
        t.expect(lhs.same_up_to_sign(rhs.sign_normalized()), "triangle split");
        return true;
    });
}

SuiteResult run_star_split(int instances, std::uint64_t seed) {
    return drive("5-invariant star split", instances, seed, small_graph, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        Set s, ij;
        if (!find_vertex(rng, g, 3, s) || !pick(rng, n, 2, s, ij)) return false;
        const int a = s[0], b = s[1], c = s[2], i = ij[0], j = ij[1];
        t.context += " star " + set_text(s) + " i,j=" + set_text(ij);
        MultiPoly lhs = five_invariant(g, {a, b, c, i, j});
        MultiPoly rhs = dodgson(g, {a, b}, {i, j}, {c}) * minor_dodgson(g, {a, b}, {c}, {i}, {j}, {});
        t.expect(lhs.same_up_to_sign(rhs.sign_normalized()), "star split");
        return true;
    });
}

SuiteResult run_chevalley_warning(int instances, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult r;
    r.name = "Chevalley-Warning";
    const int sizes[] = {2, 3, 4, 5};
    for (int it = 0; it < instances; ++it) {
        const int q = sizes[it % 4];
        FqSpec f = FqSpec::of_size(q);
        std::vector<MultiPoly> sys;
        int dim = 0;
        std::string what;
        if (it % 2 == 0) {
            dim = uniform(rng, 3, 6);
            int budget = dim - 1;
            while (budget > 0 && sys.size() < 3) {
                int d = uniform(rng, 1, budget);
                MultiPoly p;
                for (int term = 0; term < 4; ++term) {
                    MultiPoly m(static_cast<long long>(uniform(rng, -3, 3)));
                    int deg = uniform(rng, 0, d);
                    for (int k = 0; k < deg; ++k) m *= MultiPoly::var(uniform(rng, 1, dim));
                    p += m;
                }
                if (p.total_degree() < 1) continue;
                budget -= p.total_degree();
                sys.push_back(p);
            }
            what = "random system";
        } else {
            Graph g = random_graph(rng, 3, 6, 4);
            dim = g.edge_count();
            sys.push_back(graph_polynomial(g));
            what = "graph [" + graph_line(g) + "]";
        }
        Int c = count_affine(sys, f, dim);
        ++r.checked;
        if (c % q != 0) {
            ++r.failures;
            if (r.first_failure.empty()) r.first_failure = what + " over F_" + std::to_string(q);
        }
    }
    return r;
}

SuiteResult run_five_invariant_c2(int instances, std::uint64_t seed) {
    auto draw = [](Rng& rng) { return random_graph(rng, 4, 5, 5); };
    return drive("5-invariant equivalence", instances, seed, draw, [](Rng& rng, const Graph& g, Tracker& t) {
        const int n = g.edge_count();
        if (n < 5 || 2 * loop_number(g) > n) return false;
        Set three, five;
        pick(rng, n, 3, {}, three);
        pick(rng, n, 5, {}, five);
        MultiPoly d5 = five_invariant(g, {five[0], five[1], five[2], five[3], five[4]});
        t.context += " dodgson edges " + set_text(three) + " 5-invariant edges " + set_text(five);
        for (int q : {2, 3}) {
            FqSpec f(q);
            long long direct = c2_direct(g, f).residue;
            long long dodg = c2_dodgson(g, f, {three[0], three[1], three[2]}).residue;
            // [D5] in the N - 5 remaining variables.
            Int c = count_affine({d5}, f, n);
            for (int k = 0; k < 5; ++k) c /= q;
            // A vanishing 5-invariant is a weight drop: c2 = 0 (matters only when N = 5).
            long long five_r = d5.is_zero() ? 0 : static_cast<long long>(((-c) % q + q) % q);
            t.expect(direct == dodg, "direct vs dodgson at q=" + std::to_string(q));
            t.expect(direct == five_r, "direct vs -[5-invariant] at q=" + std::to_string(q));
        }
        return true;
    });
}

std::vector<SuiteResult> run_all_suites(int instances, std::uint64_t seed) {
    return {run_contraction_deletion(instances, seed),
            run_first_dodgson(instances, seed + 1),
            run_second_dodgson(instances, seed + 2),
            run_vertex_vanishing(instances, seed + 3),
            run_loop_vanishing(instances, seed + 4),
            run_two_edge_local(instances, seed + 5),
            run_local_star(instances, seed + 6),
            run_local_triangle(instances, seed + 7),
            run_five_invariant_symmetry(instances, seed + 8),
            run_triangle_split(instances, seed + 9),
            run_star_split(instances, seed + 10),
            run_chevalley_warning(instances, seed + 11),
            run_five_invariant_c2(instances, seed + 12)};
}

}  // namespace c2lab
