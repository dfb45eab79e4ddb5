#pragma once

#include "mib/graph.hpp"

namespace mib {

/// Partition V = L u R u O with G[L u R] bipartite.
struct OctDecomposition {
  VertexSet l;
  VertexSet r;
  VertexSet o;
};

/// True iff l, r, o partition V(g) and l, r are both independent.
bool verify(const Graph& g, const OctDecomposition& d);

/// Deterministic heuristic: 2-color by BFS in vertex-ID order, moving any
/// vertex whose coloring conflicts into O. Always returns a valid
/// decomposition; bipartite inputs get O = {}.
OctDecomposition greedy_oct(const Graph& g);

}  // namespace mib
