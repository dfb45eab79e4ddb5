#include "mib/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mib {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_insert(const VertexSet& a, int v) {
  VertexSet out;
  out.reserve(a.size() + 1);
  auto it = std::lower_bound(a.begin(), a.end(), v);
  out.insert(out.end(), a.begin(), it);
  if (it == a.end() || *it != v) out.push_back(v);
  out.insert(out.end(), it, a.end());
  return out;
}

std::size_t hash_ints(const int* data, std::size_t len, std::size_t seed) {
  std::size_t h = seed ^ (len * 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t x = static_cast<std::size_t>(data[i]) + 0x9e3779b97f4a7c15ULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    h = (h ^ x) * 0x94d049bb133111ebULL;
  }
  return h ^ (h >> 31);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.assign(n_, {});
  words_ = (static_cast<std::size_t>(n_) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self loop");
    if (adjacent(u, v)) throw std::invalid_argument("graph: duplicate edge");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("graph: vertex out of range");
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  count_probes(1);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
          (v % 64)) & 1ULL;
}

VertexSet Graph::completely_connected(const VertexSet& s) const {
  if (s.empty())
    throw std::invalid_argument("completely_connected: empty set");
  VertexSet out;
  for (int v = 0; v < n_; ++v) {
    if (set_contains(s, v)) continue;
    if (complete_to(v, s)) out.push_back(v);
  }
  return out;
}

VertexSet Graph::independent_from(const VertexSet& s) const {
  VertexSet out;
  for (int v = 0; v < n_; ++v) {
    if (set_contains(s, v)) continue;
    if (independent_of(v, s)) out.push_back(v);
  }
  return out;
}

bool Graph::is_independent(const VertexSet& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (adjacent(s[i], s[j])) return false;
  return true;
}

bool Graph::complete_to(int v, const VertexSet& s) const {
  for (int w : s)
    if (!adjacent(v, w)) return false;
  return true;
}

bool Graph::independent_of(int v, const VertexSet& s) const {
  for (int w : s)
    if (adjacent(v, w)) return false;
  return true;
}

std::pair<Graph, VertexSet> Graph::induced_subgraph(const VertexSet& s) const {
  std::vector<int> to_new(n_, -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_vertex(s[i]);
    to_new[s[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : s)
    for (int w : adj_[u])
      if (u < w && to_new[w] >= 0) edges.emplace_back(to_new[u], to_new[w]);
  return {Graph(static_cast<int>(s.size()), edges), s};
}

std::pair<Graph, VertexSet> Graph::strip_isolates() const {
  VertexSet keep;
  for (int v = 0; v < n_; ++v)
    if (!adj_[v].empty()) keep.push_back(v);
  return induced_subgraph(keep);
}

Biclique Biclique::unchecked(VertexSet x, VertexSet y) {
  Biclique c{std::move(x), std::move(y)};
  if (c.a.empty() || (!c.b.empty() && c.b.front() < c.a.front()))
    std::swap(c.a, c.b);
  return c;
}

Biclique Biclique::make(const Graph& g, VertexSet x, VertexSet y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("biclique: empty side");
  if (!set_intersect(x, y).empty())
    throw std::invalid_argument("biclique: overlapping sides");
  if (!g.is_independent(x) || !g.is_independent(y))
    throw std::invalid_argument("biclique: side not independent");
  for (int u : x)
    for (int v : y)
      if (!g.adjacent(u, v))
        throw std::invalid_argument("biclique: missing cross edge");
  return unchecked(std::move(x), std::move(y));
}

}  // namespace mib
