#pragma once

#include "mib/graph.hpp"

namespace mib {

/// Enumerates every maximal biclique A x B of the bipartite graph g[l,r]
/// (A subseteq l, B subseteq r) exactly once. l and r must partition V(g)
/// and both be independent; throws std::invalid_argument otherwise.
void enumerate_bipartite_mibs(const Graph& g, const VertexSet& l,
                              const VertexSet& r, const BicliqueCallback& emit);

std::vector<Biclique> all_bipartite_mibs(const Graph& g, const VertexSet& l,
                                         const VertexSet& r);

}  // namespace mib
