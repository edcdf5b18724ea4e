#pragma once

#include "drgt/edge_partition.hpp"
#include "drgt/graph.hpp"
#include "drgt/intersection_array.hpp"
#include "drgt/scalar.hpp"
#include "drgt/spectrum.hpp"

namespace drgt {

struct TightEdgeResult {
  Scalar gram_det;
  bool is_tight = false;
};

/// Decides whether the edge xy is tight with respect to theta(index) through
/// the Gram-determinant closed form
///   (sigma - sigma_2)(1 + sigma) f - (1 - sigma)(a_1 sigma + 1 + sigma),
/// which vanishes exactly on tight edges.  index must name a nontrivial
/// eigenvalue (1..d).
TightEdgeResult tight_edge_test(const Graph& g, const IntersectionArray& arr, const Spectrum& s,
                                int x, int y, int index);

struct TightnessRank {
  int t = 0;      // number of extremal eigenvalues the edge is tight for
  int dim_mh = 0; // dim of M * span{x^, y^, sum of common neighbors}
};

/// Rank route to the edge tightness: t = 3d + 1 - dim(MH).  The rank is
/// computed in floating point with relative threshold 1e-8 and cross-checked
/// against the exact rational rank and against tight_edge_test.
TightnessRank tightness_rank(const Graph& g, const IntersectionArray& arr, const Spectrum& s,
                             int x, int y);

/// Rank of a row-major float matrix via Gaussian elimination with column
/// normalization and relative pivot threshold.
int numeric_rank(std::vector<std::vector<double>> rows, double threshold = 1e-8);

/// Exact rank over the rationals.
int exact_rank(std::vector<std::vector<Rational>> rows);

} // namespace drgt
