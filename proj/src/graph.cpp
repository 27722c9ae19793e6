#include "c2lab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace c2lab {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    int x;
    while (is >> x) out.push_back(x);
    return out;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > vertex_count_) throw std::invalid_argument("edge endpoint out of range");
    }
}

Graph Graph::zero(int edge_count) {
    Graph g;
    g.zero_ = true;
    g.zero_edges_ = edge_count;
    g.vertex_count_ = 0;
    g.edges_.clear();
    return g;
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u == v || edges_[i].v == v) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int Graph::component_count() const {
    if (zero_) throw std::logic_error("zero graph");
    DisjointSets ds(vertex_count_);
    int c = vertex_count_;
    for (auto& e : edges_) c -= ds.unite(e.u, e.v);
    return c;
}

bool Graph::operator==(const Graph& o) const {
    return zero_ == o.zero_ && zero_edges_ == o.zero_edges_ && vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
}

std::string Graph::to_text() const {
    if (zero_) return "# zero graph with " + std::to_string(zero_edges_) + " edge variables\n";
    std::ostringstream os;
    os << "V " << vertex_count_ << "\n";
    for (auto& e : edges_) os << e.u << " " << e.v << "\n";
    return os.str();
}

int loop_number(const Graph& g) {
    if (g.is_zero()) throw std::invalid_argument("zero graph");
    return g.edge_count() - g.vertex_count() + g.component_count();
}

Minor minor(const Graph& g, const std::vector<int>& del, const std::vector<int>& con) {
    const int n = g.edge_count();
    std::vector<char> role(n + 1, 0);  // 1 delete, 2 contract
    for (int e : del) {
        if (e < 1 || e > n) throw std::out_of_range("minor: invalid edge index " + std::to_string(e));
        role[e] = 1;
    }
    for (int e : con) {
        if (e < 1 || e > n) throw std::out_of_range("minor: invalid edge index " + std::to_string(e));
        if (role[e] == 1) throw std::invalid_argument("minor: edge both deleted and contracted");
        role[e] = 2;
    }
    Minor m;
    m.index_map.assign(n + 1, 0);
    int next = 0;
    for (int e = 1; e <= n; ++e)
        if (!role[e]) m.index_map[e] = ++next;
    if (g.is_zero()) {
        m.graph = Graph::zero(next);
        return m;
    }
    DisjointSets ds(g.vertex_count());
    for (int e = 1; e <= n; ++e) {
        if (role[e] != 2) continue;
        if (!ds.unite(g.edge(e).u, g.edge(e).v)) {
            m.graph = Graph::zero(next);
            return m;
        }
    }
    std::vector<int> label(g.vertex_count() + 1, 0);
    int k = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (ds.find(v) == v) label[v] = ++k;
    std::vector<Edge> edges;
    for (int e = 1; e <= n; ++e)
        if (!role[e]) edges.push_back({label[ds.find(g.edge(e).u)], label[ds.find(g.edge(e).v)]});
    m.graph = Graph(k, std::move(edges));
    return m;
}

Graph reorder(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.edge_count()) throw std::invalid_argument("reorder: not a permutation");
    std::vector<char> seen(g.edge_count() + 1, 0);
    std::vector<Edge> edges;
    for (int e : order) {
        if (e < 1 || e > g.edge_count() || seen[e]) throw std::invalid_argument("reorder: not a permutation");
        seen[e] = 1;
        edges.push_back(g.edge(e));
    }
    return Graph(g.vertex_count(), std::move(edges));
}

bool is_primitive_divergent(const Graph& g) {
    if (g.is_zero() || !g.is_connected()) throw std::invalid_argument("primitive divergence needs a connected graph");
    const int n = g.edge_count();
    if (n > 20) throw std::invalid_argument("subgraph scan too large");
    if (n != 2 * loop_number(g)) return false;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> stamp(g.vertex_count() + 1, 0);
    std::vector<int> parent(g.vertex_count() + 1);
    int epoch = 0;
    for (std::uint32_t s = 1; s < full; ++s) {
        ++epoch;
        int verts = 0, comps = 0, ne = 0;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e = 0; e < n; ++e) {
            if (!(s >> e & 1)) continue;
            ++ne;
            const Edge& ed = g.edges()[e];
            for (int v : {ed.u, ed.v}) {
                if (stamp[v] != epoch) {
                    stamp[v] = epoch;
                    parent[v] = v;
                    ++verts;
                    ++comps;
                }
            }
            int a = find(ed.u), b = find(ed.v);
            if (a != b) {
                parent[b] = a;
                --comps;
            }
        }
        int h = ne - verts + comps;
        if (ne <= 2 * h) return false;
    }
    return true;
}

namespace {

std::vector<std::uint32_t> incidence_masks(const Graph& g) {
    std::vector<std::uint32_t> inc(g.vertex_count() + 1, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        inc[g.edges()[e].u] |= 1u << e;
        inc[g.edges()[e].v] |= 1u << e;
    }
    return inc;
}

int frontier(const std::vector<std::uint32_t>& inc, std::uint32_t mask, std::uint32_t full) {
    int f = 0;
    for (std::size_t v = 1; v < inc.size(); ++v)
        if ((inc[v] & mask) && (inc[v] & ~mask & full)) ++f;
    return f;
}

}  // namespace

int ordering_width(const Graph& g, const std::vector<int>& order) {
    if (g.edge_count() > 32) throw std::invalid_argument("ordering_width: too many edges");
    auto inc = incidence_masks(g);
    const std::uint32_t full = g.edge_count() == 32 ? ~0u : (1u << g.edge_count()) - 1;
    std::uint32_t mask = 0;
    int w = 0;
    for (int e : order) {
        mask |= 1u << (e - 1);
        w = std::max(w, frontier(inc, mask, full));
    }
    return w;
}

std::optional<std::vector<int>> vertex_width(const Graph& g, int bound) {
    if (g.is_zero() || !g.is_connected()) throw std::invalid_argument("vertex_width needs a connected graph");
    const int n = g.edge_count();
    if (n > 24) throw std::invalid_argument("vertex_width: graph too large for exact search");
    if (n == 0) return std::vector<int>{};
    auto inc = incidence_masks(g);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<bool> dead(std::size_t{1} << n, false);
    std::vector<int> path;
    // Edges touching the current frontier are tried first.
    std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t mask) -> bool {
        if (mask == full) return true;
        if (dead[mask]) return false;
        std::uint32_t touched = 0;
        for (std::size_t v = 1; v < inc.size(); ++v)
            if (inc[v] & mask) touched |= inc[v];
        for (int pass = 0; pass < 2; ++pass) {
            for (int e = 0; e < n; ++e) {
                std::uint32_t bit = 1u << e;
                if (mask & bit) continue;
                bool near = (touched & bit) != 0;
                if ((pass == 0) != near) continue;
                std::uint32_t next = mask | bit;
                if (frontier(inc, next, full) > bound) continue;
                path.push_back(e + 1);
                if (dfs(next)) return true;
                path.pop_back();
            }
        }
        dead[mask] = true;
        return false;
    };
    if (dfs(0)) return path;
    return std::nullopt;
}

DoubleTriangle find_double_triangle(const Graph& g, const std::array<int, 7>& edges) {
    if (g.is_zero()) throw std::invalid_argument("double triangle: zero graph");
    std::vector<int> es(edges.begin(), edges.end());
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) throw std::invalid_argument("double triangle: repeated edge");
    for (int e : es) {
        if (e < 1 || e > g.edge_count()) throw std::invalid_argument("double triangle: invalid edge index");
        if (g.edge(e).is_loop()) throw std::invalid_argument("double triangle: self-loop in configuration");
    }
    std::vector<int> cdeg(g.vertex_count() + 1, 0);
    for (int e : es) {
        ++cdeg[g.edge(e).u];
        ++cdeg[g.edge(e).v];
    }
    std::vector<int> interior;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (cdeg[v] == 4) interior.push_back(v);
    if (interior.size() != 2) throw std::invalid_argument("double triangle: need exactly two vertices of configuration degree 4");
    int x = interior[0], y = interior[1];
    if (g.degree(x) != 4 || g.degree(y) != 4)
        throw std::invalid_argument("double triangle: interior vertices carry edges outside the configuration");
    auto nbrs = [&](int v) {
        std::vector<int> out;
        for (int e : es) {
            const Edge& ed = g.edge(e);
            if (ed.u == v) out.push_back(ed.v);
            else if (ed.v == v) out.push_back(ed.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto nx = nbrs(x), ny = nbrs(y);
    if (std::count(nx.begin(), nx.end(), y) != 1) throw std::invalid_argument("double triangle: interior vertices not joined by exactly one edge");
    std::vector<int> common;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
    if (common.size() != 2 || common[0] == common[1]) throw std::invalid_argument("double triangle: triangles must share exactly the interior edge");
    int b = common[0], c = common[1];
    auto other = [&](const std::vector<int>& n, int skip) {
        std::vector<int> rest;
        for (int v : n)
            if (v != skip && v != b && v != c) rest.push_back(v);
        if (rest.size() != 1) throw std::invalid_argument("double triangle: bridging edge missing");
        return rest[0];
    };
    int a = other(nx, y), d = other(ny, x);
    std::vector<int> all{a, b, c, d, x, y};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw std::invalid_argument("double triangle: attachment vertices not distinct");
    return {a, b, c, d, x, y};
}

Minor double_triangle_reduce(const Graph& g, const std::array<int, 7>& edges) {
    DoubleTriangle dt = find_double_triangle(g, edges);
    std::vector<char> in(g.edge_count() + 1, 0);
    for (int e : edges) in[e] = 1;
    // Drop x and y, add z.
    std::vector<int> label(g.vertex_count() + 1, 0);
    int k = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (v != dt.x && v != dt.y) label[v] = ++k;
    int z = ++k;
    Minor m;
    m.index_map.assign(g.edge_count() + 1, 0);
    std::vector<Edge> out;
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (in[e]) continue;
        out.push_back({label[g.edge(e).u], label[g.edge(e).v]});
        m.index_map[e] = static_cast<int>(out.size());
    }
    out.push_back({label[dt.a], z});
    out.push_back({label[dt.b], z});
    out.push_back({label[dt.c], z});
    out.push_back({label[dt.d], z});
    out.push_back({label[dt.b], label[dt.c]});
    m.graph = Graph(k, std::move(out));
    return m;
}

Graph completion(const Graph& g) {
    if (g.is_zero() || !g.is_connected()) throw std::invalid_argument("completion needs a connected graph");
    std::vector<int> three;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 3) three.push_back(v);
        else if (d != 4) throw std::invalid_argument("completion: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
    if (three.size() != 4)
        throw std::invalid_argument("completion: expected four 3-valent vertices, found " + std::to_string(three.size()));
    std::vector<Edge> edges = g.edges();
    int w = g.vertex_count() + 1;
    for (int v : three) edges.push_back({v, w});
    return Graph(w, std::move(edges));
}

Int spanning_trees(const Graph& g) {
    if (g.is_zero()) return 0;
    const int n = g.edge_count();
    const int need = g.vertex_count() - 1;
    Int count = 0;
    // Include/exclude search over edges with a copied union-find per level.
    std::function<void(int, int, std::vector<int>)> rec = [&](int e, int taken, std::vector<int> parent) {
        if (taken == need) {
            ++count;
            return;
        }
        if (e == n || n - e < need - taken) return;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        const Edge& ed = g.edges()[e];
        int a = find(ed.u), b = find(ed.v);
        if (a != b) {
            std::vector<int> p2 = parent;
            p2[std::max(a, b)] = std::min(a, b);
            rec(e + 1, taken + 1, std::move(p2));
        }
        rec(e + 1, taken, std::move(parent));
    };
    std::vector<int> parent(g.vertex_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    rec(0, 0, parent);
    return count;
}

Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int declared = 0;
    std::vector<Edge> edges;
    int maxv = 0;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "V" || first == "v") {
            if (!edges.empty() || declared) throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": misplaced V line");
            if (!(ls >> declared) || declared < 1) throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": bad vertex count");
            continue;
        }
        auto nums = parse_int_list(line);
        if (nums.size() != 2 || nums[0] < 1 || nums[1] < 1)
            throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": expected 'u v'");
        edges.push_back({nums[0], nums[1]});
        maxv = std::max({maxv, nums[0], nums[1]});
    }
    if (declared && maxv > declared) throw std::invalid_argument("graph file: edge endpoint exceeds declared vertex count");
    int vc = declared ? declared : std::max(maxv, 1);
    return Graph(vc, std::move(edges));
}

Graph wheel(int n) {
    if (n < 1) throw std::invalid_argument("wheel needs n >= 1");
    // Rim vertices 1..n, hub n+1. Order: rim(n,1), s1, rim(1,2), s2, ..., rim(n-1,n), s_n.
    const int hub = n + 1;
    std::vector<Edge> e;
    e.push_back({n, 1});
    e.push_back({1, hub});
    for (int i = 1; i < n; ++i) {
        e.push_back({i, i + 1});
        e.push_back({i + 1, hub});
    }
    return Graph(n + 1, std::move(e));
}

Graph wheel_contracted(int n) { return minor(wheel(n), {}, {2 * n}).graph; }

Graph zigzag(int n) {
    if (n < 3) throw std::invalid_argument("zig-zag graph needs n >= 3");
    // Triangle strip on 1..n+1 closed by the edge (1, n+1).
    std::vector<Edge> e;
    e.push_back({1, n + 1});
    e.push_back({1, 2});
    e.push_back({1, 3});
    for (int i = 2; i <= n; ++i) {
        e.push_back({i, i + 1});
        if (i + 2 <= n + 1) e.push_back({i, i + 2});
    }
    return Graph(n + 1, std::move(e));
}

Graph zigzag_strip(int n) {
    if (n < 2) throw std::invalid_argument("ZB needs n >= 2");
    // Triangle strip on 1..n with the end edges (1,2) and (n-1,n) doubled.
    std::vector<Edge> e;
    e.push_back({1, 2});
    e.push_back({1, 2});
    if (n >= 3) e.push_back({1, 3});
    for (int i = 2; i < n; ++i) {
        e.push_back({i, i + 1});
        if (i + 2 <= n) e.push_back({i, i + 2});
    }
    e.push_back({n - 1, n});
    return Graph(n, std::move(e));
}

Graph graph_g8() {
    static const int pairs[16][2] = {{3, 4}, {1, 4}, {1, 3}, {1, 2}, {2, 7}, {2, 5}, {5, 8}, {7, 8},
                                     {8, 9}, {5, 9}, {4, 9}, {4, 7}, {3, 5}, {3, 6}, {6, 7}, {6, 9}};
    std::vector<Edge> e;
    for (auto& p : pairs) e.push_back({p[0], p[1]});
    return Graph(9, std::move(e));
}

Graph builtin_graph(const std::string& name) {
    if (name == "G8") return graph_g8();
    auto num = [&](std::size_t skip) {
        std::string s = name.substr(skip);
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw std::invalid_argument("unknown graph name: " + name);
        return std::stoi(s);
    };
    if (name.rfind("ZB", 0) == 0) return zigzag_strip(num(2));
    if (name.rfind("W", 0) == 0) return wheel(num(1));
    if (name.rfind("Z", 0) == 0) return zigzag(num(1));
    if (name.rfind("B", 0) == 0) return wheel_contracted(num(1));
    throw std::invalid_argument("unknown graph name: " + name);
}

Graph load_graph(const std::string& source) {
    std::ifstream in(source);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph(ss.str());
    }
    return builtin_graph(source);
}

}  // namespace c2lab
