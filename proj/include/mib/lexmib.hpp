#pragma once

#include <optional>

#include "mib/graph.hpp"

namespace mib {

/// Sorted list of all member vertices; bicliques compare lexicographically on
/// this list, ties broken on the canonical split.
std::vector<int> lex_key(const Biclique& c);
bool lex_less(const Biclique& p, const Biclique& q);

/// True iff some MIB contains x on one side and y on the other. x and y must
/// be disjoint.
bool extends_to_biclique(const Graph& g, const VertexSet& x,
                         const VertexSet& y);

/// Lexicographically least MIB containing x on one side and y on the other,
/// or nullopt when none exists.
std::optional<Biclique> least_biclique_containing(const Graph& g,
                                                  const VertexSet& x,
                                                  const VertexSet& y);

/// All MIBs, in strictly increasing lex_key order (corrected algorithm).
void lexmib(const Graph& g, const BicliqueCallback& emit);
std::vector<Biclique> lexmib_all(const Graph& g);

/// The original algorithm verbatim, kept as a demonstration mode; it can miss
/// MIBs on some graphs.
void dias_uncorrected(const Graph& g, const BicliqueCallback& emit);
std::vector<Biclique> dias_uncorrected_all(const Graph& g);

}  // namespace mib
