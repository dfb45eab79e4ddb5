#include "mib/oct.hpp"

#include <deque>

namespace mib {

bool verify(const Graph& g, const OctDecomposition& d) {
  const int n = g.num_vertices();
  std::vector<int> where(n, -1);
  auto place = [&](const VertexSet& s, int tag) {
    for (int v : s) {
      if (v < 0 || v >= n || where[v] != -1) return false;
      where[v] = tag;
    }
    return true;
  };
  if (!place(d.l, 0) || !place(d.r, 1) || !place(d.o, 2)) return false;
  for (int v = 0; v < n; ++v)
    if (where[v] == -1) return false;
  return g.is_independent(d.l) && g.is_independent(d.r);
}

OctDecomposition greedy_oct(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<char> in_oct(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1 || in_oct[start]) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (in_oct[u]) continue;
      for (int w : g.neighbors(u)) {
        if (in_oct[w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          in_oct[w] = 1;
          color[w] = -1;
        }
      }
    }
  }
  OctDecomposition d;
  for (int v = 0; v < n; ++v) {
    if (in_oct[v])
      d.o.push_back(v);
    else if (color[v] == 1)
      d.r.push_back(v);
    else
      d.l.push_back(v);  // color 0, plus never-seen vertices (isolates)
  }
  return d;
}

}  // namespace mib
