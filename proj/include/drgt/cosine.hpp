#pragma once

#include "drgt/intersection_array.hpp"
#include "drgt/quadratic.hpp"
#include "drgt/scalar.hpp"
#include "drgt/spectrum.hpp"

#include <vector>

namespace drgt {

/// Cosine sequence sigma_0..sigma_d attached to an eigenvalue theta via the
/// three-term recurrence c_i sigma_{i-1} + a_i sigma_i + b_i sigma_{i+1} =
/// theta sigma_i, started from sigma_0 = 1, sigma_1 = theta/k.
struct CosineSequence {
  Scalar theta;
  std::vector<Scalar> sigma;
};

/// Forward recurrence over any exact field (Rational, QuadExt) or Scalar.
/// `one` seeds the multiplicative identity of F.
template <class F>
std::vector<F> cosine_values(const IntersectionArray& g, const F& theta, const F& one) {
  int d = g.d();
  std::vector<F> s;
  s.reserve(d + 1);
  s.push_back(one);
  s.push_back(theta / rat(g.k()));
  for (int i = 1; i < d; ++i) {
    F t = (theta - rat(g.a(i))) * s[i] - s[i - 1] * rat(g.c(i));
    s.push_back(t / rat(g.b(i)));
  }
  return s;
}

CosineSequence cosine_sequence(const IntersectionArray& g, const Scalar& theta);
CosineSequence cosine_sequence(const IntersectionArray& g, const Eigenvalue& theta);

/// Exact sequences for the two flavors of exact eigenvalue.
std::vector<Rational> cosine_rational(const IntersectionArray& g, const Rational& theta);
std::vector<QuadExt> cosine_quad(const IntersectionArray& g, const QuadExt& theta);

/// Residual of the terminal recurrence row c_d sigma_{d-1} + a_d sigma_d -
/// theta sigma_d; zero exactly when theta is an eigenvalue.
Scalar terminal_residual(const IntersectionArray& g, const CosineSequence& seq);

struct BipartiteReport {
  bool is_bipartite = false;
  bool a_all_zero = false;
  bool thetad_is_minus_k = false;
  bool sigma1_is_minus_one = false;
  bool sigma2_is_one = false;
};

/// Decides bipartiteness from the intersection numbers and cross-asserts the
/// eigenvalue/cosine equivalences; throws InconsistentSpectrum if they ever
/// disagree.
BipartiteReport bipartite_test(const IntersectionArray& g, const Spectrum& s);

} // namespace drgt
