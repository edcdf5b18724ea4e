#pragma once

#include "drgt/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drgt {

/// Intersection array {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular
/// graph, with the derived quantities a_i, k_i, n.  Construction validates
/// c_1 = 1, positivity, a_i >= 0, integrality of every k_i, and the
/// nonvanishing of the middle a_i whenever a_1 != 0 (arrays breaking that are
/// not realizable and are rejected).
class IntersectionArray {
 public:
  IntersectionArray(std::vector<long> b, std::vector<long> c);

  /// Parses "b0,b1,...;c1,c2,..." (spaces tolerated).
  static IntersectionArray parse(const std::string& text);

  int d() const { return static_cast<int>(c_.size()); }
  long k() const { return b_[0]; }
  /// b_i for 0 <= i <= d (b_d = 0).
  long b(int i) const { return i < d() ? b_[i] : 0; }
  /// c_i for 0 <= i <= d (c_0 = 0).
  long c(int i) const { return i == 0 ? 0 : c_[i - 1]; }
  /// a_i = k - b_i - c_i.
  long a(int i) const { return a_[i]; }
  /// Valency of the distance-i graph.
  const Integer& k_i(int i) const { return ki_[i]; }
  /// Vertex count n = sum of k_i.
  const Integer& n() const { return n_; }

  bool is_bipartite_array() const; // all a_i = 0

  /// p^1_{ii} = (b_1...b_{i-1} / c_1...c_i) a_i, for 1 <= i <= d.
  Integer p1_ii(int i) const;
  /// p^1_{i-1,i} = b_1...b_{i-1} / c_1...c_{i-1}, for 1 <= i <= d.
  Integer p1_prev(int i) const;

  std::string str() const;

  bool operator==(const IntersectionArray& o) const { return b_ == o.b_ && c_ == o.c_; }
  bool operator<(const IntersectionArray& o) const {
    return b_ != o.b_ ? b_ < o.b_ : c_ < o.c_;
  }

 private:
  std::vector<long> b_, c_;
  std::vector<long> a_;
  std::vector<Integer> ki_;
  Integer n_;
};

struct DerivedCounts {
  std::vector<long> a;       // a_0..a_d
  std::vector<Integer> k_i;  // k_0..k_d
  Integer n;
  std::vector<Integer> p1_ii;   // index 1..d (index 0 unused)
  std::vector<Integer> p1_prev; // index 1..d (index 0 unused)
};

DerivedCounts derive_counts(const IntersectionArray& g);

/// Validates (b, c) without constructing; returns an error message or nullopt.
std::optional<std::string> check_array(const std::vector<long>& b, const std::vector<long>& c);

} // namespace drgt
