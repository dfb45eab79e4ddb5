#include "mib/bipartite.hpp"

#include <stdexcept>

namespace mib {

namespace {

// MBEA-style branch on right-side candidates: P holds right vertices that can
// still join the current biclique, Q those already considered (used to detect
// non-maximal branches).
struct Search {
  const Graph& g;
  const BicliqueCallback& emit;

  void expand(const VertexSet& left, const VertexSet& right, VertexSet cand,
              VertexSet seen) {
    while (!cand.empty()) {
      int x = cand.front();
      cand.erase(cand.begin());
      VertexSet left2;
      for (int u : left)
        if (g.adjacent(u, x)) left2.push_back(u);
      if (!left2.empty()) {
        VertexSet right2 = set_insert(right, x);
        VertexSet cand2, seen2;
        bool maximal = true;
        for (int v : seen) {
          int k = 0;
          for (int u : left2)
            if (g.adjacent(u, v)) ++k;
          if (k == static_cast<int>(left2.size())) {
            maximal = false;
            break;
          }
          if (k > 0) seen2.push_back(v);
        }
        if (maximal) {
          for (int v : cand) {
            int k = 0;
            for (int u : left2)
              if (g.adjacent(u, v)) ++k;
            if (k == static_cast<int>(left2.size()))
              right2 = set_insert(right2, v);
            else if (k > 0)
              cand2.push_back(v);
          }
          emit(Biclique::unchecked(left2, right2));
          if (!cand2.empty()) expand(left2, right2, cand2, seen2);
        }
      }
      seen.push_back(x);
    }
  }
};

}  // namespace

void enumerate_bipartite_mibs(const Graph& g, const VertexSet& l,
                              const VertexSet& r,
                              const BicliqueCallback& emit) {
  if (static_cast<long long>(l.size()) + static_cast<long long>(r.size()) !=
      g.num_vertices())
    throw std::invalid_argument("bipartite: l, r must partition V");
  if (!set_intersect(l, r).empty())
    throw std::invalid_argument("bipartite: l, r must be disjoint");
  if (!g.is_independent(l) || !g.is_independent(r))
    throw std::invalid_argument("bipartite: sides must be independent");
  Search search{g, emit};
  search.expand(l, {}, r, {});
}

std::vector<Biclique> all_bipartite_mibs(const Graph& g, const VertexSet& l,
                                         const VertexSet& r) {
  std::vector<Biclique> out;
  enumerate_bipartite_mibs(g, l, r,
                           [&](const Biclique& c) { out.push_back(c); });
  return out;
}

}  // namespace mib
