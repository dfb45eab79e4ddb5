#include "mib/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mib {

namespace {

// mt19937_64 with explicit draw helpers so the stream is fully specified:
// uniform doubles take one engine output, normals take exactly two
// (Box-Muller, no caching), bounded ints use rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double normal(double mean, double sd) {
    double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::uint64_t below(std::uint64_t k) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % k;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % k;
  }

 private:
  std::mt19937_64 eng_;
};

int draw_degree(Rng& rng, double density, double cv, int pool) {
  double mean = density * pool;
  double raw = cv > 0.0 ? rng.normal(mean, cv * mean) : mean;
  long long deg = std::llround(raw);
  return static_cast<int>(std::clamp(deg, 0LL, static_cast<long long>(pool)));
}

// Partial Fisher-Yates: the first deg entries of scratch become the sample.
void sample_neighbors(Rng& rng, std::vector<int>& scratch, int deg, int from,
                      std::vector<std::pair<int, int>>& edges) {
  for (int i = 0; i < deg; ++i) {
    std::size_t j = i + rng.below(scratch.size() - i);
    std::swap(scratch[i], scratch[j]);
    edges.emplace_back(from, scratch[i]);
  }
}

double coefficient_of_variation(const std::vector<int>& degrees) {
  if (degrees.empty()) return 0.0;
  double mean = std::accumulate(degrees.begin(), degrees.end(), 0.0) /
                degrees.size();
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (int d : degrees) var += (d - mean) * (d - mean);
  var /= degrees.size();
  return std::sqrt(var) / mean;
}

}  // namespace

std::pair<Graph, OctDecomposition> generate(const GenParams& p) {
  if (p.n_l < 0 || p.n_r < 0 || p.n_o < 0)
    throw std::invalid_argument("generate: negative part size");
  for (double d : {p.d_lr, p.d_ob, p.d_oo})
    if (d < 0.0 || d > 1.0)
      throw std::invalid_argument("generate: density outside [0,1]");
  if (p.cv_lr < 0.0 || p.cv_ob < 0.0)
    throw std::invalid_argument("generate: negative cv");
  if (p.oct_mode == OctMode::kPerfectMatching && p.n_o % 2 != 0)
    throw std::invalid_argument("generate: perfect matching needs even n_o");

  const int n_b = p.n_l + p.n_r;
  const int n = n_b + p.n_o;
  const int o_base = n_b;
  Rng rng(p.seed);
  std::vector<std::pair<int, int>> edges;

  // L-R: degrees on the smaller side (L on ties), neighbors in the other.
  {
    const bool l_small = p.n_l <= p.n_r;
    const int small_base = l_small ? 0 : p.n_l;
    const int small_n = l_small ? p.n_l : p.n_r;
    const int big_base = l_small ? p.n_l : 0;
    const int big_n = l_small ? p.n_r : p.n_l;
    std::vector<int> scratch(big_n);
    for (int i = 0; i < small_n; ++i) {
      int deg = draw_degree(rng, p.d_lr, p.cv_lr, big_n);
      std::iota(scratch.begin(), scratch.end(), big_base);
      sample_neighbors(rng, scratch, deg, small_base + i, edges);
    }
  }
  // O-(L u R): one draw per O vertex over the whole bipartite part.
  {
    std::vector<int> scratch(n_b);
    for (int i = 0; i < p.n_o; ++i) {
      int deg = draw_degree(rng, p.d_ob, p.cv_ob, n_b);
      std::iota(scratch.begin(), scratch.end(), 0);
      sample_neighbors(rng, scratch, deg, o_base + i, edges);
    }
  }
  // O-O
  switch (p.oct_mode) {
    case OctMode::kRandom:
      for (int i = 0; i < p.n_o; ++i)
        for (int j = i + 1; j < p.n_o; ++j)
          if (rng.u01() < p.d_oo) edges.emplace_back(o_base + i, o_base + j);
      break;
    case OctMode::kIndependent:
      break;
    case OctMode::kPerfectMatching:
      for (int i = 0; i + 1 < p.n_o; i += 2)
        edges.emplace_back(o_base + i, o_base + i + 1);
      break;
  }

  Graph g(n, edges);
  OctDecomposition d;
  for (int v = 0; v < p.n_l; ++v) d.l.push_back(v);
  for (int v = p.n_l; v < n_b; ++v) d.r.push_back(v);
  for (int v = n_b; v < n; ++v) d.o.push_back(v);

  if (p.prune_isolates) {
    auto [gs, map] = g.strip_isolates();
    std::vector<int> to_new(n, -1);
    for (std::size_t i = 0; i < map.size(); ++i) to_new[map[i]] = (int)i;
    auto remap = [&](const VertexSet& s) {
      VertexSet out;
      for (int v : s)
        if (to_new[v] >= 0) out.push_back(to_new[v]);
      return out;
    };
    return {gs, OctDecomposition{remap(d.l), remap(d.r), remap(d.o)}};
  }
  return {g, d};
}

GenStats stats(const Graph& g, const OctDecomposition& d) {
  GenStats s;
  const auto nl = d.l.size(), nr = d.r.size(), no = d.o.size();
  std::vector<char> in_l(g.num_vertices(), 0), in_r(g.num_vertices(), 0),
      in_o(g.num_vertices(), 0);
  for (int v : d.l) in_l[v] = 1;
  for (int v : d.r) in_r[v] = 1;
  for (int v : d.o) in_o[v] = 1;

  long long e_lr = 0, e_ob = 0, e_oo = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int w : g.neighbors(v)) {
      if (w < v) continue;
      if ((in_l[v] && in_r[w]) || (in_r[v] && in_l[w]))
        ++e_lr;
      else if (in_o[v] != in_o[w])
        ++e_ob;
      else if (in_o[v] && in_o[w])
        ++e_oo;
    }
  }
  if (nl && nr) s.d_lr = static_cast<double>(e_lr) / (double(nl) * nr);
  if (no && nl + nr)
    s.d_ob = static_cast<double>(e_ob) / (double(no) * (nl + nr));
  if (no > 1) s.d_oo = static_cast<double>(e_oo) / (double(no) * (no - 1) / 2);

  const VertexSet& small = nl <= nr ? d.l : d.r;
  const std::vector<char>& other = nl <= nr ? in_r : in_l;
  std::vector<int> cross;
  for (int v : small) {
    int deg = 0;
    for (int w : g.neighbors(v))
      if (other[w]) ++deg;
    cross.push_back(deg);
  }
  s.cv_lr = coefficient_of_variation(cross);
  std::vector<int> odeg;
  for (int v : d.o) {
    int deg = 0;
    for (int w : g.neighbors(v))
      if (!in_o[w]) ++deg;
    odeg.push_back(deg);
  }
  s.cv_ob = coefficient_of_variation(odeg);
  return s;
}

}  // namespace mib
