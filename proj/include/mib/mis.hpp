#pragma once

#include <functional>

#include "mib/graph.hpp"

namespace mib {

using VertexSetCallback = std::function<void(const VertexSet&)>;

/// Emits every maximal independent set of g[restrict] exactly once, in
/// lexicographic order of the sorted member list. Emits the empty set exactly
/// once iff restrict is empty.
void enumerate_mis(const Graph& g, const VertexSet& restrict,
                   const VertexSetCallback& emit);

std::vector<VertexSet> all_mis(const Graph& g, const VertexSet& restrict);

}  // namespace mib
