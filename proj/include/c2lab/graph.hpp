#pragma once

#include "c2lab/bigint.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace c2lab {

// Undirected edge, stored with u <= v. u == v is a self-loop.
struct Edge {
    int u = 0;
    int v = 0;
    bool is_loop() const { return u == v; }
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

// Ordered multigraph; the position of an edge (1-based) is its variable index.
// The zero graph (from contracting a self-loop) remembers how many edge
// variables survive so classes of its polynomial keep the right ambient space.
class Graph {
public:
    Graph() : Graph(1, {}) {}
    Graph(int vertex_count, std::vector<Edge> edges);
    static Graph zero(int edge_count);

    bool is_zero() const { return zero_; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return zero_ ? zero_edges_ : static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_.at(i - 1); }

    int degree(int v) const;  // self-loops count twice
    std::vector<int> incident_edges(int v) const;
    int component_count() const;
    bool is_connected() const { return !zero_ && component_count() == 1; }
    bool operator==(const Graph& o) const;

    std::string to_text() const;

private:
    int vertex_count_ = 1;
    std::vector<Edge> edges_;
    bool zero_ = false;
    int zero_edges_ = 0;
};

int loop_number(const Graph& g);

struct Minor {
    Graph graph;
    std::vector<int> index_map;  // index_map[old] = new index, 0 if removed; entry 0 unused
};

// Deletes `del`, then contracts `con` in increasing index order.
Minor minor(const Graph& g, const std::vector<int>& del, const std::vector<int>& con);

// Edge order[i] of g becomes edge i+1 of the result.
Graph reorder(const Graph& g, const std::vector<int>& order);

bool is_primitive_divergent(const Graph& g);

// Largest frontier size along the given ordering (a permutation of 1..N).
int ordering_width(const Graph& g, const std::vector<int>& order);
std::optional<std::vector<int>> vertex_width(const Graph& g, int bound);

struct DoubleTriangle {
    int a, b, c, d, x, y;  // attachment vertices and the two interior vertices
};
DoubleTriangle find_double_triangle(const Graph& g, const std::array<int, 7>& edges);
// Result edges: the untouched edges in order, then AZ, BZ, CZ, DZ, BC.
Minor double_triangle_reduce(const Graph& g, const std::array<int, 7>& edges);

Graph completion(const Graph& g);

Int spanning_trees(const Graph& g);

Graph parse_graph(const std::string& text);
Graph builtin_graph(const std::string& name);
// Built-in name or path to a graph file.
Graph load_graph(const std::string& source);

Graph wheel(int n);
Graph zigzag(int n);
Graph wheel_contracted(int n);  // W_n with one spoke contracted
Graph zigzag_strip(int n);
Graph graph_g8();

}  // namespace c2lab
