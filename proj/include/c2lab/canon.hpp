#pragma once

#include "c2lab/graph.hpp"

#include <string>
#include <vector>

namespace c2lab {

// Isomorphism certificate of the underlying multigraph (edge order ignored).
// A nonzero `marked` vertex is fixed by every allowed relabeling.
std::string canonical_certificate(const Graph& g, int marked = 0);

// Vertex relabeling realizing the certificate: order[i] is the vertex placed at position i.
std::vector<int> canonical_order(const Graph& g, int marked = 0);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace c2lab
