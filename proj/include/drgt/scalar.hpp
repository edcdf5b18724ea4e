#pragma once

#include "drgt/quadratic.hpp"
#include "drgt/rational.hpp"

#include <string>

namespace drgt {

/// Real quantity carried either exactly (rational) or as a float64 with an
/// absolute error bound.  Exact-exact arithmetic stays exact; anything mixing
/// in an approximate operand degrades to approximate with propagated bounds.
/// Equality on approximate values is decided by the tolerance policy:
/// indistinguishable iff |x - y| <= max(1e-9, sum of error bounds).
class Scalar {
 public:
  static constexpr double kEqTolerance = 1e-9;

  Scalar() : exact_(true), rat_(0) {}
  Scalar(Rational r) : exact_(true), rat_(std::move(r)) {}
  Scalar(long v) : exact_(true), rat_(rat(v)) {}
  Scalar(int v) : exact_(true), rat_(rat(v)) {}

  static Scalar approx(double value, double err) {
    Scalar s;
    s.exact_ = false;
    s.rat_ = 0;
    s.val_ = value;
    s.err_ = err;
    return s;
  }

  /// Exact when the quadratic part vanishes, approximate otherwise.
  static Scalar from_quad(const QuadExt& q) {
    if (q.is_rational()) return Scalar(q.rat_part());
    return approx(q.to_double(), q.double_error());
  }

  bool exact() const { return exact_; }
  const Rational& rational() const; // throws unless exact
  double value() const { return exact_ ? to_double(rat_) : val_; }
  double error() const { return exact_ ? 0.0 : err_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;

  /// Tolerant equality (exact when both operands are exact).
  bool eq(const Scalar& o) const;
  bool is_zero() const { return eq(Scalar(0)); }
  /// Sign with the same tolerance: 0 when indistinguishable from zero.
  int sign_tol() const;

  bool definitely_less(const Scalar& o) const;

  std::string str() const;

 private:
  bool exact_;
  Rational rat_;
  double val_ = 0.0;
  double err_ = 0.0;
};

} // namespace drgt
