#pragma once

#include "drgt/graph.hpp"
#include "drgt/intersection_array.hpp"

#include <vector>

namespace drgt {

/// Distance distribution D_i^j = Γ_i(x) ∩ Γ_j(y) relative to an edge xy,
/// with per-vertex neighbor counts into each cell.
struct EdgePartition {
  int x = 0, y = 0;
  int d = 0;
  std::vector<int> dist_x, dist_y;

  const std::vector<int>& cell(int i, int j) const;
  long cell_size(int i, int j) const;
  /// Neighbors of z in D_i^j.
  long count_into(const Graph& g, int z, int i, int j) const;

  std::vector<std::vector<std::vector<int>>> cells; // cells[i][j], 0..d x 0..d
};

/// Computes the partition and asserts |D_i^j| = p^1_{ij}, the |i-j| <= 1
/// support condition, and every per-vertex neighbor-count bookkeeping row.
EdgePartition edge_partition(const Graph& g, const IntersectionArray& arr, int x, int y);

struct FValue {
  Rational f;                 // ordered distance-2 pairs in D_1^1, divided by a_1
  Integer pairs_at_distance2; // ordered count
  Integer edges_11_to_12;
  Integer edges_in_11;
  Integer edges_in_12;
};

/// f(x,y) plus the three edge counts it determines, each cross-checked
/// against a direct count.
FValue compute_f(const Graph& g, const IntersectionArray& arr, const EdgePartition& p);

/// Violation strings from the per-vertex bookkeeping rows (empty = all good).
std::vector<std::string> bookkeeping_violations(const Graph& g, const IntersectionArray& arr,
                                                const EdgePartition& p);

} // namespace drgt
