#pragma once

#include "drgt/error.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace drgt {

/// Simple undirected connected graph with sorted per-vertex neighbor lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  long edge_count() const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Builds from an edge list; rejects loops, duplicate edges, and vertices out
/// of range.  Connectivity is the caller's concern (load_graph checks it).
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

std::vector<int> bfs_distances(const Graph& g, int src);
bool is_connected(const Graph& g);
int eccentricity(const Graph& g, int v);

/// Edge-list format: first line "n m", then m lines "u v" with 0 <= u < v < n.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);

// ---- constructors for the test families ----

/// d-subsets of an n-set, adjacent when the intersection has size d-1.
Graph johnson_graph(int n, int d);
/// binary strings of length n at Hamming distance 1.
Graph hypercube_graph(int n);
/// even-weight binary strings of length n at Hamming distance 2.
Graph halved_cube_graph(int n);
/// words of [q]^d differing in exactly one coordinate.
Graph hamming_graph(int d, int q);
/// the 12-vertex icosahedron.
Graph icosahedron_graph();

/// Induced subgraph on the neighbors of x (vertex order: sorted neighbors).
Graph local_graph(const Graph& g, int x);

struct SRGParams {
  long nu, kappa, lambda, mu;
  bool connected;
};

/// Brute-forces the strongly-regular parameters; throws NotStronglyRegular
/// with a witness pair when a common-neighbor count is inconstant.
SRGParams srg_parameters(const Graph& g);

} // namespace drgt
