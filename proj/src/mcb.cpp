#include "mib/mcb.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "mib/lexmib.hpp"
#include "mib/mis.hpp"

namespace mib {

namespace {

struct Bag {
  std::vector<Blueprint> members;  // shared s_i / s_w / s_p
};

struct McbRun {
  const Graph& g;
  const BicliqueCallback& emit;
  McbOptions opts;
  McbStats& stats;
  std::vector<Bag> work;

  void emit_biclique(const Blueprint& b) {
    ++stats.emitted;
    emit(Biclique::unchecked(b.s_i, b.cc_i));
  }

  // next for the crossing variant: first s_w vertex completely connected to
  // cc_i (the if_i pool is empty, so this matches compute_next).
  void finish(Blueprint& b) {
    if (is_maximal(g, b)) {
      emit_biclique(b);
      b.next = kNextInfinity;
    } else {
      b.next = compute_next(g, b);
    }
    ++stats.blueprints;
  }

  void branch(const Bag& bag) {
    const VertexSet& sw = bag.members.front().s_w;
    for (std::size_t j = 0; j < sw.size(); ++j) {
      const int w = sw[j];
      Bag child;
      std::unordered_set<VertexSet, VertexSetHash> seen_cc;
      for (const Blueprint& p : bag.members) {
        if (opts.next_pruning && p.next != kNextInfinity && w > p.next)
          continue;
        ++stats.expansions;
        Blueprint q;
        q.s_i = set_insert(p.s_i, w);
        q.cc_i = set_intersect(p.cc_i, g.neighbors(w));
        q.cc_o = set_intersect(p.cc_o, g.neighbors(w));
        q.s_w.assign(sw.begin() + j + 1, sw.end());
        q.s_p = p.s_p;
        q.s_p.insert(q.s_p.end(), sw.begin(), sw.begin() + j);
        std::sort(q.s_p.begin(), q.s_p.end());
        if (is_invalid(q) || not_future_max(g, q)) continue;
        if (opts.dedup_tables && !seen_cc.insert(q.cc_i).second) continue;
        finish(q);
        child.members.push_back(std::move(q));
      }
      if (!child.members.empty()) work.push_back(std::move(child));
    }
  }
};

}  // namespace

void mcb(const Graph& g, const VertexSet& x, const BicliqueCallback& emit,
         const McbOptions& opts, McbStats* stats) {
  if (!g.is_independent(x))
    throw std::invalid_argument("mcb: x must be independent");
  for (int v : x)
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("mcb: x vertex out of range");

  McbStats local;
  McbStats& st = stats ? *stats : local;
  McbRun run{g, emit, opts, st, {}};

  // Vertices of x without neighbors cannot appear in any crossing biclique.
  VertexSet seeds;
  for (int v : x)
    if (g.degree(v) > 0) seeds.push_back(v);

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const int v = seeds[i];
    Bag bag;
    for (const VertexSet& mis_set : all_mis(g, g.neighbors(v))) {
      Blueprint b;
      b.s_i = {v};
      b.cc_i = mis_set;
      b.cc_o = set_difference(g.neighbors(v), mis_set);
      b.s_w.assign(seeds.begin() + i + 1, seeds.end());
      b.s_p.assign(seeds.begin(), seeds.begin() + i);
      if (is_invalid(b) || not_future_max(g, b)) continue;
      run.finish(b);
      bag.members.push_back(std::move(b));
    }
    if (!bag.members.empty()) run.work.push_back(std::move(bag));
  }
  // Depth-first over bags; correctness is order-independent.
  while (!run.work.empty()) {
    Bag bag = std::move(run.work.back());
    run.work.pop_back();
    run.branch(bag);
  }
}

std::vector<Biclique> mcb_all(const Graph& g, const VertexSet& x,
                              const McbOptions& opts, McbStats* stats) {
  std::vector<Biclique> out;
  mcb(g, x, [&](const Biclique& c) { out.push_back(c); }, opts, stats);
  return out;
}

namespace {

void independent_subsets_of(const Graph& g, const VertexSet& pool,
                            std::size_t from, VertexSet& cur,
                            const std::function<void(const VertexSet&)>& visit) {
  for (std::size_t i = from; i < pool.size(); ++i) {
    int v = pool[i];
    if (!g.independent_of(v, cur)) continue;
    cur.push_back(v);
    visit(cur);
    independent_subsets_of(g, pool, i + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Biclique> crossing_oracle(const Graph& g, const VertexSet& x) {
  if (g.num_vertices() > 20)
    throw std::invalid_argument("crossing_oracle: graph too large (n > 20)");
  if (!g.is_independent(x))
    throw std::invalid_argument("crossing_oracle: x must be independent");
  VertexSet y;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!set_contains(x, v)) y.push_back(v);

  std::unordered_set<Biclique, BicliqueHash> found;
  VertexSet cur;
  independent_subsets_of(g, x, 0, cur, [&](const VertexSet& a) {
    VertexSet pool = set_intersect(g.completely_connected(a), y);
    for (const VertexSet& b : all_mis(g, pool)) {
      if (b.empty()) continue;
      // crossing-maximal: no x vertex can join a, no y vertex can join b
      bool extendable = false;
      for (int v : x) {
        if (set_contains(a, v)) continue;
        if (g.complete_to(v, b)) {
          extendable = true;
          break;
        }
      }
      for (int v : y) {
        if (extendable) break;
        if (set_contains(b, v)) continue;
        if (g.complete_to(v, a) && g.independent_of(v, b)) extendable = true;
      }
      if (!extendable) found.insert(Biclique::unchecked(a, b));
    }
  });
  std::vector<Biclique> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const Biclique& p, const Biclique& q) { return lex_less(p, q); });
  return out;
}

}  // namespace mib
