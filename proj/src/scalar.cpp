#include "drgt/scalar.hpp"

#include "drgt/error.hpp"

#include <cmath>
#include <sstream>

namespace drgt {

namespace {
// one ulp-ish slop per operation on top of propagated bounds
double round_slop(double v) { return std::fabs(v) * 1e-16 + 1e-300; }
} // namespace

const Rational& Scalar::rational() const {
  if (!exact_) fail(Errc::Internal, "rational() on approximate scalar");
  return rat_;
}

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(Rational(-rat_));
  return approx(-val_, err_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(Rational(rat_ + o.rat_));
  double v = value() + o.value();
  return approx(v, error() + o.error() + round_slop(v));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(Rational(rat_ - o.rat_));
  double v = value() - o.value();
  return approx(v, error() + o.error() + round_slop(v));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(Rational(rat_ * o.rat_));
  double v = value() * o.value();
  double e = std::fabs(value()) * o.error() + std::fabs(o.value()) * error() +
             error() * o.error() + round_slop(v);
  return approx(v, e);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (exact_ && o.exact_) {
    if (o.rat_ == 0) fail(Errc::ZeroDenominator, "scalar division by zero");
    return Scalar(Rational(rat_ / o.rat_));
  }
  double den = o.value();
  if (den == 0.0) fail(Errc::ZeroDenominator, "scalar division by zero");
  double v = value() / den;
  double e = (error() + std::fabs(v) * o.error()) / std::fabs(den) + round_slop(v);
  return approx(v, e);
}

bool Scalar::eq(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ == o.rat_;
  double tol = std::max(kEqTolerance, error() + o.error());
  return std::fabs(value() - o.value()) <= tol;
}

int Scalar::sign_tol() const {
  if (exact_) return sgn(rat_);
  double tol = std::max(kEqTolerance, err_);
  if (std::fabs(val_) <= tol) return 0;
  return val_ > 0 ? 1 : -1;
}

bool Scalar::definitely_less(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ < o.rat_;
  return (o - *this).sign_tol() > 0;
}

std::string Scalar::str() const {
  if (exact_) return to_string(rat_);
  std::ostringstream os;
  os.precision(15);
  os << val_;
  return os.str();
}

} // namespace drgt
