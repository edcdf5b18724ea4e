#pragma once

#include "drgt/intersection_array.hpp"
#include "drgt/scalar.hpp"
#include "drgt/tightness.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace drgt {

struct SearchConfig {
  int d = 4;
  long max_k = 16;
  bool require_antipodal = false;
  bool require_feasible = false; // the theta_d cosine sequence must be feasible too
  bool numeric_tolerance = false; // accept |slack| < 1e-9 with the numeric flag
  bool prune = true;             // monotone c/b enumeration + c_d = k
  std::uint64_t candidate_cap = 100000000;
  std::uint64_t progress_every = 1000000;
  std::function<void(std::uint64_t)> progress; // called with the candidate count
  int threads = 0;                             // 0 = DRGT_THREADS or hardware
};

struct SearchHit {
  IntersectionArray array;
  Scalar slack;
  Scalar epsilon;
  Scalar theta1, thetad;
  bool numerically_tight = false;
};

/// Enumerates integral intersection arrays of diameter d with k <= max_k that
/// attain equality in the Fundamental Bound, filtered by k_i integrality,
/// a_d = 0, nonvanishing middle a_i, multiplicity integrality, and exact zero
/// slack.  Output is sorted lexicographically and deterministic.
std::vector<SearchHit> search_tight_arrays(const SearchConfig& cfg);

} // namespace drgt
