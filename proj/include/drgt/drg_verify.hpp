#pragma once

#include "drgt/graph.hpp"
#include "drgt/intersection_array.hpp"

namespace drgt {

/// BFS from every vertex and checks that the c/a/b neighbor counts depend
/// only on the distance; returns the intersection array on success and throws
/// NotDistanceRegular naming the offending pair otherwise.  `strict` also
/// spot-checks constancy of the full distance distribution for base distances
/// h >= 2.  Graphs above 5000 vertices are refused unless `force`.
IntersectionArray verify_distance_regular(const Graph& g, bool strict = false, bool force = false);

} // namespace drgt
