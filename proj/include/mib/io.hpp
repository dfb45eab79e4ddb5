#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mib/graph.hpp"
#include "mib/oct.hpp"

namespace mib {

/// Graph file: line 1 "n m", then m lines "u v" with 0-based IDs.
/// '#' starts a comment; duplicate and self edges are rejected.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// Vertex-set file: one vertex ID per line, '#' comments allowed.
VertexSet read_vertex_set(std::istream& in, int n);
VertexSet read_vertex_set_file(const std::string& path, int n);
void write_vertex_set_file(const std::string& path, const VertexSet& s);

/// 2-colors g[V \ exclude]; components are rooted at their smallest vertex,
/// which lands on the L side. nullopt when the subgraph is not bipartite.
std::optional<std::pair<VertexSet, VertexSet>> two_color(
    const Graph& g, const VertexSet& exclude);

/// Recovers a full decomposition from an OCT vertex list; throws
/// std::invalid_argument when g[V \ o] is not bipartite.
OctDecomposition decomposition_from_oct(const Graph& g, const VertexSet& o);

/// "a1 a2 ... | b1 b2 ...", both sides ascending, canonical side first.
std::string format_biclique(const Biclique& c);

}  // namespace mib
