#include "mib/mis.hpp"

#include <algorithm>

namespace mib {

namespace {

// Bron-Kerbosch with pivoting on the complement of g[restrict]: maximal
// cliques of the complement are exactly the maximal independent sets.
struct MisSearch {
  const Graph& g;
  std::vector<VertexSet> out;

  bool comp_adjacent(int u, int v) const { return u != v && !g.adjacent(u, v); }

  void run(VertexSet& chosen, VertexSet cand, VertexSet excl) {
    if (cand.empty() && excl.empty()) {
      out.push_back(chosen);
      return;
    }
    // Pivot: vertex of cand+excl with the most complement-neighbors in cand.
    int pivot = -1, best = -1;
    for (const VertexSet* pool : {&cand, &excl}) {
      for (int u : *pool) {
        int cnt = 0;
        for (int v : cand)
          if (comp_adjacent(u, v)) ++cnt;
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    }
    VertexSet branch;
    for (int v : cand)
      if (!comp_adjacent(pivot, v)) branch.push_back(v);
    for (int v : branch) {
      VertexSet cand2, excl2;
      for (int w : cand)
        if (comp_adjacent(v, w)) cand2.push_back(w);
      for (int w : excl)
        if (comp_adjacent(v, w)) excl2.push_back(w);
      chosen.push_back(v);
      run(chosen, std::move(cand2), std::move(excl2));
      chosen.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excl.insert(std::lower_bound(excl.begin(), excl.end(), v), v);
    }
  }
};

}  // namespace

std::vector<VertexSet> all_mis(const Graph& g, const VertexSet& restrict) {
  MisSearch search{g, {}};
  VertexSet chosen;
  search.run(chosen, restrict, {});
  for (auto& s : search.out) std::sort(s.begin(), s.end());
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

void enumerate_mis(const Graph& g, const VertexSet& restrict,
                   const VertexSetCallback& emit) {
  for (const auto& s : all_mis(g, restrict)) emit(s);
}

}  // namespace mib
