#include "mib/octmib.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mib/bipartite.hpp"
#include "mib/blueprint.hpp"
#include "mib/mcb.hpp"
#include "mib/mis.hpp"

namespace mib {

namespace {

// Dedup key over the pair (cc_i, if_i).
VertexSet pair_key(const VertexSet& cc, const VertexSet& iff) {
  VertexSet key;
  key.reserve(cc.size() + iff.size() + 1);
  key.insert(key.end(), cc.begin(), cc.end());
  key.push_back(-1);
  key.insert(key.end(), iff.begin(), iff.end());
  return key;
}

struct Bag {
  std::vector<Blueprint> members;  // shared s_i / s_w / s_p / o_if
};

struct OctMibRun {
  const Graph& g;
  OctMibOptions opts;
  const BicliqueCallback& out;
  VertexSet L, R, O, LR;
  std::unordered_set<Biclique, BicliqueHash> seen;
  std::vector<Bag> work;

  // A biclique can be discovered once per MIS of O; the stream dedups here.
  void emit(const VertexSet& a, const VertexSet& b) {
    Biclique c = Biclique::unchecked(a, b);
    if (seen.insert(c).second) out(c);
  }

  void finish(Blueprint& b) {
    if (is_maximal(g, b)) {
      emit(set_union(b.s_i, b.if_i), b.cc_i);
      b.next = kNextInfinity;
    } else {
      b.next = compute_next(g, b);
    }
  }

  void bipartite_phase() {
    auto [gb, map] = g.induced_subgraph(LR);
    std::vector<int> to_new(g.num_vertices(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) to_new[map[i]] = (int)i;
    VertexSet l2, r2;
    for (int v : L) l2.push_back(to_new[v]);
    for (int v : R) r2.push_back(to_new[v]);
    enumerate_bipartite_mibs(gb, l2, r2, [&](const Biclique& c) {
      VertexSet a, b;
      for (int v : c.a) a.push_back(map[v]);
      for (int v : c.b) b.push_back(map[v]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (int o : O) {
        if ((g.independent_of(o, a) && g.complete_to(o, b)) ||
            (g.independent_of(o, b) && g.complete_to(o, a)))
          return;  // an OCT node can be added; not maximal in g
      }
      emit(a, b);
    });
  }

  // Runs MCB on the subgraph induced on sub with designated set x, mapping
  // results back to g's IDs.
  std::vector<Biclique> crossing_on(const VertexSet& sub, const VertexSet& x) {
    if (x.empty()) return {};
    auto [sg, map] = g.induced_subgraph(sub);
    std::vector<int> to_new(g.num_vertices(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) to_new[map[i]] = (int)i;
    VertexSet x2;
    for (int v : x) x2.push_back(to_new[v]);
    McbOptions mo{opts.next_pruning, opts.dedup_tables};
    std::vector<Biclique> res;
    for (const Biclique& c : mcb_all(sg, x2, mo)) {
      VertexSet a, b;
      for (int v : c.a) a.push_back(map[v]);
      for (int v : c.b) b.push_back(map[v]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      // keep the designated side first
      if (!is_subset(a, x)) std::swap(a, b);
      res.push_back(Biclique{a, b});
    }
    return res;
  }

  void init_with(const VertexSet& s, std::size_t i) {
    const int v = s[i];
    const VertexSet& nbhd = g.neighbors(v);
    VertexSet bar_l = set_difference(L, nbhd);
    VertexSet bar_r = set_difference(R, nbhd);
    Blueprint base;
    base.s_i = {v};
    base.s_w.assign(s.begin() + i + 1, s.end());
    base.s_p.assign(s.begin(), s.begin() + i);
    base.o_if = set_difference(set_difference(O, nbhd), s);

    Bag bag;
    std::unordered_set<VertexSet, VertexSetHash> bag_keys;
    auto add_candidate = [&](VertexSet cc, VertexSet iff, VertexSet if_o) {
      Blueprint b = base;
      b.cc_i = std::move(cc);
      b.if_i = std::move(iff);
      b.cc_o = set_difference(nbhd, b.cc_i);
      b.if_o = std::move(if_o);
      if (is_invalid(b) || not_future_max(g, b)) return;
      if (opts.dedup_tables &&
          !bag_keys.insert(pair_key(b.cc_i, b.if_i)).second)
        return;
      finish(b);
      bag.members.push_back(std::move(b));
    };

    // round 1: MISs of N(v) that no bar_l / bar_r vertex completes
    for (const VertexSet& mis_set : all_mis(g, nbhd)) {
      if (mis_set.empty()) continue;
      bool blocked = false;
      for (const VertexSet* pool : {&bar_l, &bar_r}) {
        for (int u : *pool)
          if (g.complete_to(u, mis_set)) {
            blocked = true;
            break;
          }
        if (blocked) break;
      }
      if (!blocked)
        add_candidate(mis_set, {}, set_difference(LR, nbhd));
    }
    // round 2: crossing bicliques anchored in bar_l
    {
      VertexSet sub = set_union(bar_l, set_difference(nbhd, L));
      for (const Biclique& c : crossing_on(sub, bar_l)) {
        VertexSet plus;
        for (int u : bar_r)
          if (g.independent_of(u, c.a) && g.complete_to(u, c.b))
            plus.push_back(u);
        VertexSet iff = set_union(c.a, plus);
        add_candidate(c.b, iff,
                      set_difference(set_difference(LR, nbhd), iff));
      }
    }
    // round 3: crossing bicliques anchored in bar_r, kept only when no bar_l
    // vertex fits their independent side
    {
      VertexSet sub = set_union(bar_r, set_difference(nbhd, R));
      for (const Biclique& c : crossing_on(sub, bar_r)) {
        bool blocked = false;
        for (int u : bar_l)
          if (g.independent_of(u, c.a) && g.complete_to(u, c.b)) {
            blocked = true;
            break;
          }
        if (!blocked)
          add_candidate(c.b, c.a,
                        set_difference(set_difference(LR, nbhd), c.a));
      }
    }
    if (!bag.members.empty()) work.push_back(std::move(bag));
  }

  void branch(const Bag& bag) {
    const VertexSet& sw = bag.members.front().s_w;
    for (std::size_t j = 0; j < sw.size(); ++j) {
      const int w = sw[j];
      const VertexSet& nb = g.neighbors(w);
      Bag child;
      std::unordered_set<VertexSet, VertexSetHash> keys;
      for (const Blueprint& p : bag.members) {
        if (opts.next_pruning && p.next != kNextInfinity && w > p.next)
          continue;
        Blueprint q;
        q.s_i = set_insert(p.s_i, w);
        q.if_i = set_difference(p.if_i, nb);
        q.cc_i = set_intersect(p.cc_i, nb);
        q.if_o = set_difference(p.if_o, nb);
        q.cc_o = set_intersect(p.cc_o, nb);
        q.o_if = set_difference(p.o_if, nb);
        q.s_w.assign(sw.begin() + j + 1, sw.end());
        q.s_p = p.s_p;
        q.s_p.insert(q.s_p.end(), sw.begin(), sw.begin() + j);
        std::sort(q.s_p.begin(), q.s_p.end());
        if (is_invalid(q) || not_future_max(g, q)) continue;
        if (opts.dedup_tables && !keys.insert(pair_key(q.cc_i, q.if_i)).second)
          continue;
        finish(q);
        child.members.push_back(std::move(q));
      }
      if (!child.members.empty()) work.push_back(std::move(child));
    }
  }

  void run(const OctDecomposition& d) {
    L = d.l;
    R = d.r;
    O = d.o;
    LR = set_union(L, R);
    bipartite_phase();
    if (O.empty()) return;
    for (const VertexSet& s : all_mis(g, O)) {
      for (std::size_t i = 0; i < s.size(); ++i) init_with(s, i);
      while (!work.empty()) {
        Bag bag = std::move(work.back());
        work.pop_back();
        branch(bag);
      }
    }
  }
};

}  // namespace

void octmib(const Graph& g, const OctDecomposition& d,
            const BicliqueCallback& emit, const OctMibOptions& opts) {
  if (!verify(g, d))
    throw std::invalid_argument("octmib: invalid OCT decomposition");
  // Isolates are in no biclique; work on the stripped graph and map back.
  auto [gs, map] = g.strip_isolates();
  std::vector<int> to_new(g.num_vertices(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) to_new[map[i]] = (int)i;
  auto remap = [&](const VertexSet& s) {
    VertexSet out;
    for (int v : s)
      if (to_new[v] >= 0) out.push_back(to_new[v]);
    return out;
  };
  OctDecomposition ds{remap(d.l), remap(d.r), remap(d.o)};
  BicliqueCallback inner = [&](const Biclique& c) {
    VertexSet a, b;
    for (int v : c.a) a.push_back(map[v]);
    for (int v : c.b) b.push_back(map[v]);
    emit(Biclique::unchecked(std::move(a), std::move(b)));
  };
  OctMibRun run{gs, opts, inner};
  run.run(ds);
}

std::vector<Biclique> octmib_all(const Graph& g, const OctDecomposition& d,
                                 const OctMibOptions& opts) {
  std::vector<Biclique> out;
  octmib(g, d, [&](const Biclique& c) { out.push_back(c); }, opts);
  return out;
}

long long count_mibs(const Graph& g, const OctDecomposition& d) {
  long long count = 0;
  octmib(g, d, [&](const Biclique&) { ++count; });
  return count;
}

}  // namespace mib
