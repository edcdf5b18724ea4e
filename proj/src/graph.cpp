#include "drgt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace drgt {

long Graph::edge_count() const {
  long deg = 0;
  for (const auto& a : adj) deg += static_cast<long>(a.size());
  return deg / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Errc::ParseError, "vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) fail(Errc::Loop, "loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      fail(Errc::MultiEdge, "duplicate edge at vertex " + std::to_string(v));
  }
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

int eccentricity(const Graph& g, int v) {
  auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

Graph load_graph(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  int lineno = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n <= 0 || m < 0)
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"n m\"");
      continue;
    }
    long u, v;
    if (!(ls >> u >> v))
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u == v) fail(Errc::Loop, "line " + std::to_string(lineno) + ": loop " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
      fail(Errc::ParseError,
           "line " + std::to_string(lineno) + ": need 0 <= u < v < n");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) fail(Errc::ParseError, "empty graph file");
  if (static_cast<long>(edges.size()) != m)
    fail(Errc::ParseError, "edge count mismatch: header says " + std::to_string(m) + ", got " +
                               std::to_string(edges.size()));
  Graph g = make_graph(static_cast<int>(n), edges);
  if (!is_connected(g)) fail(Errc::Disconnected, "graph is not connected");
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.n << " " << g.edge_count() << "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) out << u << " " << v << "\n";
}

Graph johnson_graph(int n, int d) {
  if (n < 2 || n > 16 || d < 1 || d >= n)
    fail(Errc::ParamOutOfRange, "johnson needs 2 <= n <= 16, 1 <= d < n");
  std::vector<unsigned> sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == d) sets.push_back(mask);
  int N = static_cast<int>(sets.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (__builtin_popcount(sets[i] & sets[j]) == d - 1) edges.emplace_back(i, j);
  return make_graph(N, edges);
}

Graph hypercube_graph(int n) {
  if (n < 1 || n > 16) fail(Errc::ParamOutOfRange, "hypercube needs 1 <= n <= 16");
  int N = 1 << n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < N; ++u)
    for (int b = 0; b < n; ++b) {
      int v = u ^ (1 << b);
      if (u < v) edges.emplace_back(u, v);
    }
  return make_graph(N, edges);
}

Graph halved_cube_graph(int n) {
  if (n < 2 || n > 16) fail(Errc::ParamOutOfRange, "halved cube needs 2 <= n <= 16");
  std::vector<unsigned> verts;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) % 2 == 0) verts.push_back(mask);
  std::vector<int> index(1u << n, -1);
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i)
    for (int b1 = 0; b1 < n; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2) {
        unsigned w = verts[i] ^ (1u << b1) ^ (1u << b2);
        int j = index[w];
        if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
      }
  return make_graph(static_cast<int>(verts.size()), edges);
}

Graph hamming_graph(int d, int q) {
  if (d < 1 || q < 2) fail(Errc::ParamOutOfRange, "hamming needs d >= 1, q >= 2");
  long N = 1;
  for (int i = 0; i < d; ++i) {
    N *= q;
    if (N > 60000) fail(Errc::ParamOutOfRange, "hamming graph too large");
  }
  std::vector<std::pair<int, int>> edges;
  long stride = 1;
  for (int pos = 0; pos < d; ++pos) {
    for (long u = 0; u < N; ++u) {
      long digit = (u / stride) % q;
      for (long e = digit + 1; e < q; ++e) {
        long v = u + (e - digit) * stride;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
    stride *= q;
  }
  return make_graph(static_cast<int>(N), edges);
}

Graph icosahedron_graph() {
  // apex 0, upper 5-ring 1..5, lower 5-ring 6..10, apex 11
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, un = 1 + (i + 1) % 5;
    int w = 6 + i, wn = 6 + (i + 1) % 5;
    edges.emplace_back(0, u);
    edges.emplace_back(u, un);
    edges.emplace_back(11, w);
    edges.emplace_back(w, wn);
    edges.emplace_back(u, w);
    edges.emplace_back(u, wn);
  }
  return make_graph(12, edges);
}

Graph local_graph(const Graph& g, int x) {
  const auto& nb = g.adj[x];
  int k = static_cast<int>(nb.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(nb[i], nb[j])) edges.emplace_back(i, j);
  return make_graph(k, edges);
}

SRGParams srg_parameters(const Graph& g) {
  int n = g.n;
  if (n < 2) fail(Errc::NotStronglyRegular, "too few vertices");
  long kappa = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != kappa)
      fail(Errc::NotStronglyRegular, "not regular at vertex " + std::to_string(v));
  long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      long common = 0;
      const auto& a = g.adj[u];
      for (int w : a)
        if (g.adjacent(v, w)) ++common;
      if (g.adjacent(u, v)) {
        if (lambda < 0) lambda = common;
        if (common != lambda)
          fail(Errc::NotStronglyRegular, "lambda inconstant at pair (" + std::to_string(u) + "," +
                                             std::to_string(v) + ")");
      } else {
        if (mu < 0) mu = common;
        if (common != mu)
          fail(Errc::NotStronglyRegular, "mu inconstant at pair (" + std::to_string(u) + "," +
                                             std::to_string(v) + ")");
      }
    }
  if (lambda < 0) lambda = 0;
  if (mu < 0) mu = 0;
  return {n, kappa, lambda, mu, is_connected(g)};
}

} // namespace drgt
