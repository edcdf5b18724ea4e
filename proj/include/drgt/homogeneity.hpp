#pragma once

#include "drgt/edge_partition.hpp"
#include "drgt/graph.hpp"
#include "drgt/intersection_array.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace drgt {

using Cell = std::pair<int, int>;

/// Witness that |Γ(z) ∩ D_r^s| is constant over z within every cell, for a
/// fixed base edge: the admissible cell set L, the constant count matrix,
/// and any violations found.
struct HomogeneityCertificate {
  int x = 0, y = 0;
  std::vector<Cell> L;
  std::map<std::pair<Cell, Cell>, long> constants;

  struct Violation {
    int z;
    Cell cell, target;
    long expected, actual;
  };
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks 1-homogeneity with respect to the edge xy.  Asserts |L| matches
/// 3d (a_d != 0) or 3d-1 (a_d = 0) when a_1 != 0, and, for 1-homogeneous
/// edges with a_d = 0, that the two reduced count families (diagonal-to-
/// diagonal and offdiagonal-to-diagonal) determine the whole matrix through
/// the neighbor bookkeeping rows.
HomogeneityCertificate check_one_homogeneous(const Graph& g, const IntersectionArray& arr, int x,
                                             int y);

struct HomogeneityAllReport {
  long edges_checked = 0;
  long edges_failed = 0;
  std::optional<HomogeneityCertificate> first_failure;
  std::optional<HomogeneityCertificate> sample; // certificate of the first edge
  bool constants_uniform = true;                // same count matrix across edges
};

/// Runs the per-edge check over all edges (or a deterministic sample of
/// max_edges of them when max_edges > 0).
HomogeneityAllReport check_one_homogeneous_all(const Graph& g, const IntersectionArray& arr,
                                               long max_edges = 0);

} // namespace drgt
