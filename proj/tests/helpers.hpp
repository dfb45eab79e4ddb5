#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "mib/graph.hpp"
#include "mib/lexmib.hpp"

namespace test {

inline mib::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return mib::Graph(n, e);
}

inline mib::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return mib::Graph(n, e);
}

inline mib::Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return mib::Graph(n, e);
}

// 6-vertex running example: MIBs are {0,1,4}x{2}, {0,5}x{2}, {1,3}x{5},
// {1,4}x{5}, {2,3}x{4}, {2,3}x{5}.
inline mib::Graph figure_graph() {
  return mib::Graph(6, {{0, 2}, {1, 2}, {1, 5}, {2, 4},
                        {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

inline mib::Graph er_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(eng) < p) e.emplace_back(i, j);
  return mib::Graph(n, e);
}

// Greedy maximal independent set over a seeded random vertex order.
inline mib::VertexSet random_mis(const mib::Graph& g, std::uint64_t seed) {
  std::vector<int> order(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) order[i] = i;
  std::mt19937_64 eng(seed);
  std::shuffle(order.begin(), order.end(), eng);
  mib::VertexSet x;
  for (int v : order)
    if (g.independent_of(v, x)) x = mib::set_insert(x, v);
  return x;
}

inline std::vector<mib::Biclique> sorted(std::vector<mib::Biclique> v) {
  std::sort(v.begin(), v.end(), mib::lex_less);
  return v;
}

}  // namespace test
