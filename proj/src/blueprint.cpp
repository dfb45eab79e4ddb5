#include "mib/blueprint.hpp"

namespace mib {

namespace {

constexpr unsigned kCc = 1, kIf = 2, kSi = 4;

struct Marks {
  std::vector<unsigned char> tag;

  Marks(const Graph& g, const Blueprint& b) : tag(g.num_vertices(), 0) {
    for (int v : b.cc_i) tag[v] |= kCc;
    for (int v : b.if_i) tag[v] |= kIf;
    for (int v : b.s_i) tag[v] |= kSi;
  }

  // One pass over N(v); each neighbor visit is one edge inspection.
  void scan(const Graph& g, int v, int& cc, int& iff, int& si) const {
    cc = iff = si = 0;
    const VertexSet& nb = g.neighbors(v);
    g.count_probes(nb.size());
    for (int w : nb) {
      unsigned t = tag[w];
      cc += t & kCc ? 1 : 0;
      iff += t & kIf ? 1 : 0;
      si += t & kSi ? 1 : 0;
    }
  }
};

}  // namespace

bool is_invalid(const Blueprint& b) { return b.cc_i.empty(); }

bool not_future_max(const Graph& g, const Blueprint& b) {
  Marks marks(g, b);
  const int ncc = static_cast<int>(b.cc_i.size());
  const int nif = static_cast<int>(b.if_i.size());
  const int nsi = static_cast<int>(b.s_i.size());
  int cc, iff, si;
  // (i) an s_p vertex fits the independent side
  for (int v : b.s_p) {
    marks.scan(g, v, cc, iff, si);
    if (cc == ncc && iff == 0) return true;
  }
  // (ii) a cc_o vertex fits the cc side (complete to s_i u if_i, independent
  // from cc_i; completeness to s_i holds by construction but is checked)
  for (int v : b.cc_o) {
    marks.scan(g, v, cc, iff, si);
    if (cc == 0 && iff == nif && si == nsi) return true;
  }
  // (iii) an if_o vertex fits the independent side
  for (int v : b.if_o) {
    marks.scan(g, v, cc, iff, si);
    if (cc == ncc && iff == 0) return true;
  }
  return false;
}

bool is_maximal(const Graph& g, const Blueprint& b) {
  Marks marks(g, b);
  const int ncc = static_cast<int>(b.cc_i.size());
  int cc, iff, si;
  for (const VertexSet* pool : {&b.s_w, &b.o_if}) {
    for (int v : *pool) {
      marks.scan(g, v, cc, iff, si);
      if (cc == ncc && iff == 0) return false;
    }
  }
  return true;
}

int compute_next(const Graph& g, const Blueprint& b) {
  Marks marks(g, b);
  const int ncc = static_cast<int>(b.cc_i.size());
  int cc, iff, si;
  for (int v : b.s_w) {
    marks.scan(g, v, cc, iff, si);
    if (cc == ncc && iff == 0) return v;
  }
  return kNextInfinity;
}

}  // namespace mib
