#include "mib/io.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mib {

namespace {

// Strips comments and blank lines, yielding token streams per line.
bool next_line(std::istream& in, std::istringstream& out) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (ss >> tok) {
      out = std::istringstream(line);
      return true;
    }
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::istringstream line;
  if (!next_line(in, line))
    throw std::invalid_argument("graph file: missing header");
  long long n, m;
  if (!(line >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("graph file: bad header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line))
      throw std::invalid_argument("graph file: missing edge line");
    int u, v;
    if (!(line >> u >> v))
      throw std::invalid_argument("graph file: bad edge line");
    edges.emplace_back(u, v);
  }
  // Graph's constructor rejects self loops, duplicates, out-of-range IDs.
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w : g.neighbors(v))
      if (v < w) out << v << ' ' << w << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  write_graph(out, g);
}

VertexSet read_vertex_set(std::istream& in, int n) {
  VertexSet s;
  std::istringstream line;
  while (next_line(in, line)) {
    int v;
    while (line >> v) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("vertex set file: ID out of range");
      s.push_back(v);
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("vertex set file: duplicate ID");
  return s;
}

VertexSet read_vertex_set_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_vertex_set(in, n);
}

void write_vertex_set_file(const std::string& path, const VertexSet& s) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  for (int v : s) out << v << '\n';
}

std::optional<std::pair<VertexSet, VertexSet>> two_color(
    const Graph& g, const VertexSet& exclude) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (int v : exclude) color[v] = 2;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] == 2) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet l, r;
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0) l.push_back(v);
    if (color[v] == 1) r.push_back(v);
  }
  return std::make_pair(l, r);
}

OctDecomposition decomposition_from_oct(const Graph& g, const VertexSet& o) {
  auto lr = two_color(g, o);
  if (!lr)
    throw std::invalid_argument(
        "OCT set invalid: remaining graph is not bipartite");
  return OctDecomposition{lr->first, lr->second, o};
}

std::string format_biclique(const Biclique& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.a.size(); ++i)
    out << (i ? " " : "") << c.a[i];
  out << " |";
  for (int v : c.b) out << ' ' << v;
  return out.str();
}

}  // namespace mib
