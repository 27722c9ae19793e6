#include "doctest.h"

#include "c2lab/kirchhoff.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace c2lab;

namespace {
MultiPoly a(int v) { return MultiPoly::var(v); }
Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }
Graph banana(int k) { return Graph(2, std::vector<Edge>(k, Edge{1, 2})); }
}  // namespace

TEST_CASE("matrix conventions") {
    GraphMatrix m = build_matrix(Graph(2, {{1, 2}}));
    REQUIRE(m.size() == 2);
    CHECK(m.entries[0][0] == a(1));
    CHECK(m.entries[0][1] == MultiPoly(1));
    CHECK(m.entries[1][0] == MultiPoly(-1));
    CHECK(m.entries[1][1].is_zero());
    GraphMatrix loop = build_matrix(Graph(1, {{1, 1}}));
    CHECK(loop.size() == 1);
    CHECK(loop.entries[0][0] == a(1));
    CHECK(determinant(build_matrix(triangle()).entries) == a(1) + a(2) + a(3));
}

TEST_CASE("determinant against Laplace expansion") {
    std::mt19937 rng(1);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
        for (auto& row : m)
            for (auto& x : row) {
                int r = static_cast<int>(rng() % 6);
                if (r == 0) x = MultiPoly(1);
                else if (r == 1) x = MultiPoly(-1);
                else if (r == 2) x = a(1 + static_cast<int>(rng() % 4)) + static_cast<long long>(rng() % 3);
                else if (r == 3) x = MultiPoly(2);
            }
        CHECK(determinant(m) == oracle::laplace_det(m));
    }
}

TEST_CASE("graph polynomial equals tree sum") {
    CHECK(graph_polynomial(banana(3)) == a(1) * a(2) + a(1) * a(3) + a(2) * a(3));
    CHECK(graph_polynomial(Graph(4, {{1, 2}, {2, 3}, {2, 4}})) == MultiPoly(1));
    CHECK(graph_polynomial(Graph::zero(3)).is_zero());
    CHECK(graph_polynomial(Graph(3, {{1, 2}})).is_zero());
    for (const Graph& g : oracle::connected_multigraphs(6)) CHECK(graph_polynomial(g) == oracle::tree_sum(g));
    std::mt19937 rng(2);
    for (int it = 0; it < 40; ++it) {
        Graph g = oracle::random_connected(rng, 11, true);
        CHECK(graph_polynomial(g) == oracle::tree_sum(g));
    }
    std::vector<Int> ones(16, 1);
    CHECK(graph_polynomial(graph_g8()).evaluate(ones) == 3785);
}

TEST_CASE("dodgson examples") {
    CHECK(dodgson(triangle(), {1}, {1}) == MultiPoly(1));
    CHECK(dodgson(triangle(), {}, {}, {1}) == a(2) + a(3));
    MultiPoly d = dodgson(banana(3), {1}, {2});
    CHECK(d.same_up_to_sign(a(3)));
    CHECK_THROWS(dodgson(triangle(), {1, 2}, {1}));
    CHECK_THROWS(dodgson(triangle(), {1}, {2}, {1}));
}

TEST_CASE("three-valent structure") {
    auto check = [](const Graph& g, int e1, int e2, int e3) {
        VertexStructure s = three_valent_structure(g, e1, e2, e3);
        CHECK(s.f0 * s.f123 == s.f1 * s.f2 + s.f1 * s.f3 + s.f2 * s.f3);
        return s;
    };
    Graph w3 = wheel(3);
    int v = 1;
    auto inc = w3.incident_edges(v);
    check(w3, inc[0], inc[1], inc[2]);
    VertexStructure star = check(Graph(4, {{1, 2}, {1, 3}, {1, 4}}), 1, 2, 3);
    CHECK(star.f0.is_zero());
    CHECK(star.f1.is_zero());
    CHECK(star.f123 == MultiPoly(1));
    Graph z4 = zigzag(4);
    for (int u = 1; u <= z4.vertex_count(); ++u) {
        if (z4.degree(u) != 3) continue;
        auto e = z4.incident_edges(u);
        check(z4, e[0], e[1], e[2]);
    }
}
