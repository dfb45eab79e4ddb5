#pragma once

#include "mib/graph.hpp"

namespace mib {

/// Exhaustive ground truth: every MIB of g, sorted by lexicographic key.
/// Candidate generation walks all non-empty independent sets A and the MISs
/// of g[C(A)]. Guarded to n <= 20; throws std::invalid_argument beyond.
std::vector<Biclique> all_mibs(const Graph& g);

/// Independent second oracle: scans all disjoint subset pairs and keeps the
/// candidates not properly contained in another candidate. Guarded to n <= 14.
std::vector<Biclique> all_mibs_naive(const Graph& g);

}  // namespace mib
