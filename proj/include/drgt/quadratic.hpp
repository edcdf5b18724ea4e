#pragma once

#include "drgt/rational.hpp"

namespace drgt {

/// Real quadratic field Q(theta) with theta^2 = S*theta + P, i.e. theta a root
/// of x^2 - Sx - P.  The generator is pinned to the LARGER real root
/// theta = (S + sqrt(S^2+4P))/2; the conjugate root is S - theta.
struct QuadraticField {
  Rational S;
  Rational P;

  Rational discriminant() const { return S * S + 4 * P; }
  bool operator==(const QuadraticField& o) const { return S == o.S && P == o.P; }

  /// True iff x^2 - Sx - P has two distinct real irrational roots.
  bool is_real_irrational() const;

  double theta_double() const;
};

/// Element a + b*theta of a quadratic field, with exact arithmetic.
class QuadExt {
 public:
  QuadExt(QuadraticField f, Rational a, Rational b)
      : field_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt constant(const QuadraticField& f, const Rational& a) { return {f, a, 0}; }
  static QuadExt generator(const QuadraticField& f) { return {f, 0, 1}; }
  /// The conjugate root S - theta as a field element.
  static QuadExt cogenerator(const QuadraticField& f) { return {f, f.S, -1}; }

  const QuadraticField& field() const { return field_; }
  const Rational& rat_part() const { return a_; }
  const Rational& quad_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  QuadExt conj() const { return {field_, a_ + b_ * field_.S, -b_}; }
  /// (a+b*theta)(a+b*theta') — always rational.
  Rational norm() const { return a_ * a_ + a_ * b_ * field_.S - b_ * b_ * field_.P; }

  QuadExt operator-() const { return {field_, -a_, -b_}; }
  QuadExt operator+(const QuadExt& o) const { return {field_, a_ + o.a_, b_ + o.b_}; }
  QuadExt operator-(const QuadExt& o) const { return {field_, a_ - o.a_, b_ - o.b_}; }
  QuadExt operator*(const QuadExt& o) const {
    // (a + b t)(c + d t) = ac + bdP + (ad + bc + bdS) t
    Rational bd = b_ * o.b_;
    return {field_, a_ * o.a_ + bd * field_.P, a_ * o.b_ + b_ * o.a_ + bd * field_.S};
  }
  QuadExt operator/(const QuadExt& o) const;

  QuadExt operator+(const Rational& r) const { return {field_, a_ + r, b_}; }
  QuadExt operator-(const Rational& r) const { return {field_, a_ - r, b_}; }
  QuadExt operator*(const Rational& r) const { return {field_, a_ * r, b_ * r}; }
  QuadExt operator/(const Rational& r) const;

  bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign under the pinned real embedding.
  int sign() const;
  bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
  bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }

  double to_double() const;
  /// Crude absolute error bound for to_double().
  double double_error() const;

 private:
  QuadraticField field_;
  Rational a_, b_;
};

inline QuadExt operator*(const Rational& r, const QuadExt& x) { return x * r; }
inline QuadExt operator+(const Rational& r, const QuadExt& x) { return x + r; }
inline QuadExt operator-(const Rational& r, const QuadExt& x) { return -(x - r); }

} // namespace drgt
