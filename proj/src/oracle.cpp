#include "mib/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "mib/lexmib.hpp"
#include "mib/mis.hpp"

namespace mib {

namespace {

bool single_vertex_extendable(const Graph& g, const VertexSet& a,
                              const VertexSet& b) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (set_contains(a, v) || set_contains(b, v)) continue;
    if (g.independent_of(v, a) && g.complete_to(v, b)) return true;
    if (g.independent_of(v, b) && g.complete_to(v, a)) return true;
  }
  return false;
}

void independent_subsets(const Graph& g, int from, VertexSet& cur,
                         const std::function<void(const VertexSet&)>& visit) {
  for (int v = from; v < g.num_vertices(); ++v) {
    if (!g.independent_of(v, cur)) continue;
    cur.push_back(v);
    visit(cur);
    independent_subsets(g, v + 1, cur, visit);
    cur.pop_back();
  }
}

std::vector<Biclique> sorted_unique(
    std::unordered_set<Biclique, BicliqueHash>&& found) {
  std::vector<Biclique> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const Biclique& p, const Biclique& q) { return lex_less(p, q); });
  return out;
}

}  // namespace

std::vector<Biclique> all_mibs(const Graph& g) {
  if (g.num_vertices() > 20)
    throw std::invalid_argument("all_mibs: graph too large (n > 20)");
  std::unordered_set<Biclique, BicliqueHash> found;
  VertexSet cur;
  independent_subsets(g, 0, cur, [&](const VertexSet& a) {
    VertexSet pool = g.completely_connected(a);
    for (const VertexSet& b : all_mis(g, pool)) {
      if (b.empty()) continue;
      if (!single_vertex_extendable(g, a, b))
        found.insert(Biclique::unchecked(a, b));
    }
  });
  return sorted_unique(std::move(found));
}

std::vector<Biclique> all_mibs_naive(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 14)
    throw std::invalid_argument("all_mibs_naive: graph too large (n > 14)");
  std::vector<unsigned> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) nbr[v] |= 1u << w;

  // indep[m] true iff the vertex set encoded by m is independent.
  std::vector<char> indep(std::size_t{1} << n, 1);
  for (unsigned m = 1; m < (1u << n); ++m) {
    int low = std::countr_zero(m);
    unsigned rest = m & (m - 1);
    indep[m] = indep[rest] && (nbr[low] & rest) == 0;
  }
  auto to_set = [&](unsigned m) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    return s;
  };

  std::unordered_set<Biclique, BicliqueHash> cand;
  const unsigned full = (n == 32) ? ~0u : (1u << n) - 1;
  for (unsigned am = 1; am <= full; ++am) {
    if (!indep[am]) continue;
    unsigned rest = full & ~am;
    for (unsigned bm = rest; bm; bm = (bm - 1) & rest) {
      if (!indep[bm]) continue;
      bool complete = true;
      for (unsigned t = am; t && complete; t &= t - 1)
        if ((nbr[std::countr_zero(t)] & bm) != bm) complete = false;
      if (complete) cand.insert(Biclique::unchecked(to_set(am), to_set(bm)));
    }
  }
  // Keep candidates with no one-vertex-larger candidate (stepwise containment
  // reaches any proper biclique superset).
  std::unordered_set<Biclique, BicliqueHash> kept;
  for (const Biclique& c : cand) {
    bool contained = false;
    for (int v = 0; v < n && !contained; ++v) {
      if (set_contains(c.a, v) || set_contains(c.b, v)) continue;
      if (cand.count(Biclique::unchecked(set_insert(c.a, v), c.b)) ||
          cand.count(Biclique::unchecked(c.a, set_insert(c.b, v))))
        contained = true;
    }
    if (!contained) kept.insert(c);
  }
  return sorted_unique(std::move(kept));
}

}  // namespace mib
