#pragma once

#include "drgt/edge_partition.hpp"
#include "drgt/graph.hpp"
#include "drgt/intersection_array.hpp"
#include "drgt/spectrum.hpp"

#include <string>
#include <vector>

namespace drgt {

struct CountFormulaReport {
  long checks = 0;
  Rational max_deviation = Rational(0);
  struct Mismatch {
    std::string formula;
    int i;
    int z;
    std::string expected;
    long actual;
  };
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty() && max_deviation == 0; }
};

/// Compares every closed-form cell count against the brute-force count, for
/// the cosine sequence of the extremal eigenvalue theta(index), over a fixed
/// base edge:
///  - |Γ_{i-1}(z) ∩ D_1^1| and |Γ_i(z) ∩ D_1^1| for z in the offdiagonal cells,
///  - the three-shell counts for z in the diagonal cells,
///  - |Γ(z) ∩ D_{i±1}^{i±1}| for z in the diagonal cells,
///  - |Γ(z) ∩ D_{i-1}^{i-1}| for z in the offdiagonal cells.
/// Requires a tight array and index in {1, d}; deviations are exact.
CountFormulaReport verify_count_formulas(const Graph& g, const IntersectionArray& arr,
                                         const Spectrum& s, int index, int x, int y);

} // namespace drgt
