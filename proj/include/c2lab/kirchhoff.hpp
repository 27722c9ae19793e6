#pragma once

#include "c2lab/graph.hpp"
#include "c2lab/multipoly.hpp"

#include <vector>

namespace c2lab {

// Rows and columns 1..N are edges, N+1.. are vertices 1..V-1 (vertex V removed).
// Edge (u,v), u<v, is oriented u->v: +1 at the tail, -1 at the head in the
// edge-vertex block, and the negated transpose in the vertex-edge block.
struct GraphMatrix {
    int edge_count = 0;
    int deleted_vertex = 0;
    std::vector<std::vector<MultiPoly>> entries;  // 0-based
    int size() const { return static_cast<int>(entries.size()); }
};

GraphMatrix build_matrix(const Graph& g);

// Exact determinant over Z[a1..]: elimination on constant +-1 pivots, then
// column-subset expansion (or Bareiss for large remainders).
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

MultiPoly graph_polynomial(const Graph& g);

// det M_G(I,J)_K; rows I and columns J removed, a_k = 0 for k in K.
MultiPoly dodgson(const Graph& g, const std::vector<int>& I, const std::vector<int>& J, const std::vector<int>& K = {});

struct VertexStructure {
    MultiPoly f0, f1, f2, f3, f123;
};

// Edges e1,e2,e3 must form a 3-valent vertex. Signs of f1,f2,f3 are chosen so
// that Psi_G = f0*(a1a2+a1a3+a2a3) + (f1+f2)a3 + (f1+f3)a2 + (f2+f3)a1 + f123.
VertexStructure three_valent_structure(const Graph& g, int e1, int e2, int e3);

// Vertex whose incident edges are exactly {e1,e2,e3} as a 3-valent vertex, or 0.
int three_valent_vertex(const Graph& g, int e1, int e2, int e3);

}  // namespace c2lab
