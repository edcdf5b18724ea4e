#pragma once

#include "drgt/cosine.hpp"
#include "drgt/error.hpp"
#include "drgt/intersection_array.hpp"
#include "drgt/scalar.hpp"
#include "drgt/spectrum.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace drgt {

enum class Classification { Tight, Bipartite, NonTightSlack };

const char* classification_name(Classification c);

struct FundamentalBound {
  Scalar lhs, rhs, slack;
  bool exact = true; // slack decided exactly (rational or conjugate-pair route)
};

/// (theta_1 + k/(a_1+1)) (theta_d + k/(a_1+1))  vs  -k a_1 b_1 / (a_1+1)^2.
/// Exact for rational extremes and for a conjugate quadratic pair (computed
/// through the symmetric functions theta_1+theta_d, theta_1*theta_d).
FundamentalBound fundamental_bound(const IntersectionArray& g, const Spectrum& s);

struct ClassifyResult {
  Classification classification;
  FundamentalBound fb;
  bool numerically_tight = false; // slack decided at 1e-9 instead of exactly
};

ClassifyResult classify(const IntersectionArray& g, const Spectrum& s);

struct AuxiliaryParameter {
  Scalar epsilon;
  bool attached_to_theta1 = true;
  std::optional<QuadExt> quad; // exact form when available
};

/// epsilon = (k^2 - theta*theta') / (k (theta - theta')); asserts the tight
/// bounds 1 < |eps| < min(k/theta_1, -k/theta_d).
Scalar auxiliary_parameter(long k, const Scalar& theta, const Scalar& theta_prime);

/// The auxiliary parameter attached to theta_1 of a tight spectrum.
AuxiliaryParameter auxiliary_parameter(const IntersectionArray& g, const Spectrum& s);

template <class F>
bool quad_is_zero(const F& v);
template <>
inline bool quad_is_zero<Rational>(const Rational& v) {
  return v == 0;
}
template <>
inline bool quad_is_zero<QuadExt>(const QuadExt& v) {
  return v.is_zero();
}
template <>
inline bool quad_is_zero<Scalar>(const Scalar& v) {
  return v.sign_tol() == 0;
}

/// rho_i = prod_{j<=i} (sigma_{j-1} - eps sigma_j) / (sigma_j - eps sigma_{j-1});
/// recovers the complementary extremal cosine sequence of a tight graph.
template <class F>
std::vector<F> rho_from_sigma_values(const std::vector<F>& sig, const F& eps, const F& one) {
  std::vector<F> rho{one};
  for (size_t j = 1; j < sig.size(); ++j) {
    F den = sig[j] - eps * sig[j - 1];
    if (quad_is_zero(den))
      fail(Errc::DegenerateDenominator,
           "sigma_" + std::to_string(j) + " = eps * sigma_" + std::to_string(j - 1));
    rho.push_back(rho.back() * ((sig[j - 1] - eps * sig[j]) / den));
  }
  return rho;
}

CosineSequence rho_from_sigma(const CosineSequence& sigma, const Scalar& epsilon);

/// Def-level feasibility: theta is extremal and sigma_{i-1} != sigma_{i+1}
/// for 1 <= i <= d-1.
bool feasibility(const CosineSequence& sigma, const Spectrum& s);

/// Output of the (sigma, eps) -> intersection-numbers map.  Entries are exact
/// rationals; `integral` marks whether they form a genuine intersection array.
struct ParametrizedArray {
  std::vector<Rational> b; // b_0..b_{d-1}
  std::vector<Rational> c; // c_1..c_d
  std::vector<Rational> a; // a_0..a_d
  Rational k;
  bool integral = false;
  std::optional<IntersectionArray> array; // present when integral

  std::string str() const;
};

struct ParametrizeResult {
  ParametrizedArray arr;
  Rational h, g;
  Scalar theta1, thetad;
};

/// Intersection numbers from a feasible cosine sequence and its auxiliary
/// parameter.  Exact rational input only.
ParametrizeResult parametrize(const std::vector<Rational>& sigma, const Rational& epsilon);

/// Intersection numbers from the two extremal cosine sequences.
ParametrizedArray two_eigenvalue_parametrize(const std::vector<Rational>& sigma,
                                             const std::vector<Rational>& rho);

/// Lower/upper bounds on the edge scalar f from the extremal eigenvalues;
/// equal exactly when the graph is tight.
std::pair<Scalar, Scalar> f_bounds(const IntersectionArray& g, const Spectrum& s);

struct LocalSRG {
  Scalar nu, kappa, lambda, mu;
  Scalar r, s;
  Scalar mult_r, mult_s;
  std::optional<QuadExt> r_quad, s_quad;
};

/// Strongly-regular parameters of every local graph of a tight graph, with
/// the nontrivial eigenvalues r = b+, s = b- and their multiplicities.
LocalSRG local_srg(const IntersectionArray& g, const Spectrum& s);

/// b- = -1 - b_1/(1+theta_1),  b+ = -1 - b_1/(1+theta_d).
std::pair<Scalar, Scalar> b_plus_minus(const IntersectionArray& g, const Spectrum& s);

/// AT4(r,s,t) label for tight antipodal diameter-4 arrays: r, -s the local
/// eigenvalues, t = k_d + 1 the antipodal class size.
std::optional<std::array<long, 3>> at4_label(const IntersectionArray& g, const Spectrum& s,
                                             const LocalSRG& local);

bool is_antipodal_array(const IntersectionArray& g);

struct TightnessReport {
  FundamentalBound fb;
  Classification classification;
  bool numerically_tight = false;
  std::optional<AuxiliaryParameter> epsilon;
  std::optional<std::pair<Scalar, Scalar>> f; // absent when a_1 = 0
  std::optional<LocalSRG> local;              // present when tight
  Scalar b_plus, b_minus;
  std::optional<std::array<long, 3>> at4;
};

TightnessReport tightness_report(const IntersectionArray& g, const Spectrum& s);

} // namespace drgt
