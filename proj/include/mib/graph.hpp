#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace mib {

/// Sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_insert(const VertexSet& a, int v);

std::size_t hash_ints(const int* data, std::size_t len, std::size_t seed = 0);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    return hash_ints(s.data(), s.size());
  }
};

/// Immutable undirected simple graph over vertex IDs 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  long long num_edges() const { return m_; }

  const VertexSet& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  /// All v not in s with s subseteq N(v). Throws if s is empty.
  VertexSet completely_connected(const VertexSet& s) const;
  /// All v not in s with N(v) disjoint from s.
  VertexSet independent_from(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

  /// s subseteq N(v), membership test form.
  bool complete_to(int v, const VertexSet& s) const;
  /// N(v) disjoint from s, membership test form.
  bool independent_of(int v, const VertexSet& s) const;

  /// Subgraph on s with vertices relabeled 0..|s|-1; map sends new IDs back
  /// to the original ones (map[i] == s[i]).
  std::pair<Graph, VertexSet> induced_subgraph(const VertexSet& s) const;
  /// Drops degree-0 vertices; map sends new IDs back to the original ones.
  std::pair<Graph, VertexSet> strip_isolates() const;

  // Edge-inspection instrumentation for complexity tests. Not synchronized;
  // enable only in single-threaded runs.
  void start_probe_count() const {
    counting_ = true;
    probes_ = 0;
  }
  std::uint64_t stop_probe_count() const {
    counting_ = false;
    return probes_;
  }
  void count_probes(std::uint64_t k) const {
    if (counting_) probes_ += k;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  mutable bool counting_ = false;
  mutable std::uint64_t probes_ = 0;
};

/// Induced biclique a x b in canonical form: `a` is the side holding the
/// globally smallest member vertex.
struct Biclique {
  VertexSet a;
  VertexSet b;

  /// Canonicalizes without validating against a graph.
  static Biclique unchecked(VertexSet x, VertexSet y);
  /// Validates disjointness, non-emptiness, independence of both sides and
  /// complete cross edges, then canonicalizes. Throws std::invalid_argument.
  static Biclique make(const Graph& g, VertexSet x, VertexSet y);

  bool operator==(const Biclique& o) const = default;
};

struct BicliqueHash {
  std::size_t operator()(const Biclique& c) const {
    std::size_t h = hash_ints(c.a.data(), c.a.size(), 0x9e3779b97f4a7c15ULL);
    return hash_ints(c.b.data(), c.b.size(), h);
  }
};

using BicliqueCallback = std::function<void(const Biclique&)>;

}  // namespace mib
