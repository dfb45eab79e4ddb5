#pragma once

#include "mib/blueprint.hpp"
#include "mib/graph.hpp"

namespace mib {

struct McbOptions {
  bool next_pruning = true;
  bool dedup_tables = true;
};

struct McbStats {
  std::uint64_t expansions = 0;
  std::uint64_t blueprints = 0;
  std::uint64_t emitted = 0;
};

/// Enumerates every maximal crossing biclique A x B with A inside the
/// designated independent set x and B inside V \ x, exactly once (with the
/// default options). Throws std::invalid_argument if x is not independent.
void mcb(const Graph& g, const VertexSet& x, const BicliqueCallback& emit,
         const McbOptions& opts = {}, McbStats* stats = nullptr);

std::vector<Biclique> mcb_all(const Graph& g, const VertexSet& x,
                              const McbOptions& opts = {},
                              McbStats* stats = nullptr);

/// Exhaustive ground truth for the crossing problem; n <= 20.
std::vector<Biclique> crossing_oracle(const Graph& g, const VertexSet& x);

}  // namespace mib
