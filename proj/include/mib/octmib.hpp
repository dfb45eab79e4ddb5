#pragma once

#include "mib/graph.hpp"
#include "mib/oct.hpp"

namespace mib {

struct OctMibOptions {
  bool next_pruning = true;
  bool dedup_tables = true;
};

/// Enumerates every maximal induced biclique of g exactly once, given a valid
/// OCT decomposition. Throws std::invalid_argument if verify(g, d) fails.
void octmib(const Graph& g, const OctDecomposition& d,
            const BicliqueCallback& emit, const OctMibOptions& opts = {});

std::vector<Biclique> octmib_all(const Graph& g, const OctDecomposition& d,
                                 const OctMibOptions& opts = {});

long long count_mibs(const Graph& g, const OctDecomposition& d);

}  // namespace mib
