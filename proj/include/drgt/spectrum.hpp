#pragma once

#include "drgt/intersection_array.hpp"
#include "drgt/polynomial.hpp"
#include "drgt/quadratic.hpp"
#include "drgt/scalar.hpp"

#include <optional>
#include <vector>

namespace drgt {

struct Eigenvalue {
  Scalar value;
  long multiplicity = 0;
  /// Set when the eigenvalue lives in a quadratic extension of Q; carries the
  /// exact representation used for exact downstream arithmetic.
  std::optional<QuadExt> quad;

  bool is_exact() const { return value.exact() || quad.has_value(); }
};

/// Eigenvalues theta_0 > theta_1 > ... > theta_d of the intersection matrix,
/// with multiplicities m(theta) = n / sum_i k_i sigma_i(theta)^2.
class Spectrum {
 public:
  Spectrum(std::vector<Eigenvalue> eigs) : eigs_(std::move(eigs)) {}

  int d() const { return static_cast<int>(eigs_.size()) - 1; }
  const std::vector<Eigenvalue>& eigenvalues() const { return eigs_; }
  const Eigenvalue& theta(int i) const { return eigs_[i]; }
  const Eigenvalue& theta1() const { return eigs_[1]; }
  const Eigenvalue& thetad() const { return eigs_.back(); }

  /// The common quadratic field when theta_1 and theta_d are conjugate
  /// quadratic irrationals (theta_1 the larger root); empty otherwise.
  std::optional<QuadraticField> extremal_pair_field() const;

 private:
  std::vector<Eigenvalue> eigs_;
};

/// det(xI - B) for the tridiagonal intersection matrix B; monic with integer
/// coefficients.
Poly characteristic_polynomial(const IntersectionArray& g);

/// Computes the full spectrum.  Exact rationals where the characteristic
/// polynomial splits; exact quadratic representation when a degree-2 factor
/// remains; certified float enclosures (refined to 1e-12) otherwise.
/// Throws MultiplicityNotIntegral when a multiplicity fails integrality
/// (which signals the array is not realizable), and InvalidArray when the
/// eigenvalues violate the d >= 3 range bounds theta_1 > 0, a_1 - k <=
/// theta_d < -1.
Spectrum spectrum(const IntersectionArray& g);

} // namespace drgt
