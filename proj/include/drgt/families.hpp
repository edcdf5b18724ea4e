#pragma once

#include "drgt/intersection_array.hpp"

#include <vector>

namespace drgt {

// Closed-form intersection arrays of the classical families.

IntersectionArray johnson_array(int n, int d);
IntersectionArray hamming_array(int d, int q);
IntersectionArray halved_cube_array(int d);       // 1/2 H(2d,2)
IntersectionArray folded_cube_array(int m);       // folded m-cube, m >= 5
IntersectionArray odd_graph_array(int m);         // O_m, diameter m-1
IntersectionArray doubled_odd_array();            // doubled O_3 (Desargues), d = 5
IntersectionArray crown_array(int m);             // K_{m,m} minus a perfect matching
IntersectionArray taylor_array(long k, long c2);  // {k,c2,1;1,c2,k}
IntersectionArray cycle_array(int n);             // C_n, n >= 6

/// Every realizable array the families above produce with diameter in
/// [dmin, dmax] and valency <= max_k.  Taylor members are restricted to
/// instances with a known regular two-graph.  All entries are intersection
/// arrays of actual distance-regular graphs.
std::vector<IntersectionArray> realizable_pool(int dmin, int dmax, long max_k);

} // namespace drgt
