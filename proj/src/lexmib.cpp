#include "mib/lexmib.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace mib {

std::vector<int> lex_key(const Biclique& c) { return set_union(c.a, c.b); }

bool lex_less(const Biclique& p, const Biclique& q) {
  std::vector<int> kp = lex_key(p), kq = lex_key(q);
  if (kp != kq) return kp < kq;
  if (p.a != q.a) return p.a < q.a;
  return p.b < q.b;
}

bool extends_to_biclique(const Graph& g, const VertexSet& x,
                         const VertexSet& y) {
  if (!set_intersect(x, y).empty())
    throw std::invalid_argument("extends_to_biclique: sides overlap");
  if (!g.is_independent(x) || !g.is_independent(y)) return false;
  for (int u : x)
    for (int v : y)
      if (!g.adjacent(u, v)) return false;
  if (x.empty() && y.empty()) return g.num_edges() > 0;
  // An empty side needs a legal seed vertex.
  auto has_seed = [&](const VertexSet& other) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (set_contains(other, v)) continue;
      if (g.complete_to(v, other)) return true;
    }
    return false;
  };
  if (y.empty()) return has_seed(x);
  if (x.empty()) return has_seed(y);
  return true;
}

std::optional<Biclique> least_biclique_containing(const Graph& g,
                                                  const VertexSet& x,
                                                  const VertexSet& y) {
  if (!extends_to_biclique(g, x, y)) return std::nullopt;
  VertexSet cx = x, cy = y;
  // Greedy: repeatedly add the smallest vertex whose addition keeps the pair
  // extendable; both-side feasibility only happens while both sides are
  // empty, where the sides are symmetric.
  bool added = true;
  while (added) {
    added = false;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (set_contains(cx, v) || set_contains(cy, v)) continue;
      if (extends_to_biclique(g, set_insert(cx, v), cy)) {
        cx = set_insert(cx, v);
      } else if (extends_to_biclique(g, cx, set_insert(cy, v))) {
        cy = set_insert(cy, v);
      } else {
        continue;
      }
      added = true;
      break;
    }
  }
  return Biclique::unchecked(std::move(cx), std::move(cy));
}

namespace {

struct LexLess {
  bool operator()(const Biclique& p, const Biclique& q) const {
    return lex_less(p, q);
  }
};

// Queue-driven lexicographic enumeration; `corrected` adds the |Y_j| = 0
// clause and the least-biclique fallback for empty Y'_j.
void run_lex(const Graph& g, bool corrected, const BicliqueCallback& emit) {
  const int n = g.num_vertices();
  auto first = least_biclique_containing(g, {}, {});
  if (!first) return;

  std::set<Biclique, LexLess> queue;
  std::unordered_set<Biclique, BicliqueHash> ever;  // recall-all membership
  auto push = [&](const Biclique& c) {
    if (ever.insert(c).second) queue.insert(c);
  };
  push(*first);

  while (!queue.empty()) {
    Biclique cur = *queue.begin();
    queue.erase(queue.begin());
    emit(cur);
    VertexSet members = set_union(cur.a, cur.b);
    for (int j = 0; j < n; ++j) {
      if (set_contains(members, j)) continue;
      for (int orient = 0; orient < 2; ++orient) {
        const VertexSet& xo = orient == 0 ? cur.a : cur.b;
        const VertexSet& yo = orient == 0 ? cur.b : cur.a;
        VertexSet xj, yj;
        for (int u : xo)
          if (u < j) xj.push_back(u);
        for (int u : yo)
          if (u < j) yj.push_back(u);

        bool has_x_neighbor = false, has_y_nonneighbor = false;
        for (int u : xj)
          if (g.adjacent(u, j)) has_x_neighbor = true;
        for (int u : yj)
          if (!g.adjacent(u, j)) has_y_nonneighbor = true;
        bool cond = has_x_neighbor || has_y_nonneighbor;
        if (corrected) cond = cond || yj.empty();
        if (!cond) continue;

        VertexSet xpj, ypj;
        for (int u : xj)
          if (!g.adjacent(u, j)) xpj.push_back(u);
        xpj = set_insert(xpj, j);
        for (int u : yj)
          if (g.adjacent(u, j)) ypj.push_back(u);

        // no l < j outside the biclique may extend X'_j u Y'_j
        bool blocked = false;
        for (int l = 0; l < j && !blocked; ++l) {
          if (set_contains(members, l) || l == j) continue;
          if (set_contains(xpj, l) || set_contains(ypj, l)) continue;
          if (extends_to_biclique(g, set_insert(xpj, l), ypj) ||
              extends_to_biclique(g, xpj, set_insert(ypj, l)))
            blocked = true;
        }
        if (blocked) continue;

        auto next = least_biclique_containing(g, xpj, ypj);
        if (next) {
          push(*next);
        } else if (corrected && ypj.empty()) {
          for (int v : g.neighbors(j)) {
            VertexSet a2 = set_intersect(g.neighbors(v), xpj);
            auto fallback = least_biclique_containing(g, a2, {v});
            if (fallback) push(*fallback);
          }
        }
      }
    }
  }
}

}  // namespace

void lexmib(const Graph& g, const BicliqueCallback& emit) {
  run_lex(g, true, emit);
}

std::vector<Biclique> lexmib_all(const Graph& g) {
  std::vector<Biclique> out;
  lexmib(g, [&](const Biclique& c) { out.push_back(c); });
  return out;
}

void dias_uncorrected(const Graph& g, const BicliqueCallback& emit) {
  run_lex(g, false, emit);
}

std::vector<Biclique> dias_uncorrected_all(const Graph& g) {
  std::vector<Biclique> out;
  dias_uncorrected(g, [&](const Biclique& c) { out.push_back(c); });
  return out;
}

}  // namespace mib
