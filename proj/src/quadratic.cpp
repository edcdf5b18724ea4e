#include "drgt/quadratic.hpp"

#include "drgt/error.hpp"

#include <cmath>

namespace drgt {

namespace {

bool is_rational_square(const Rational& r, Rational* root = nullptr) {
  if (sgn(r) < 0) return false;
  Integer num = r.get_num(), den = r.get_den();
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (sn * sn != num || sd * sd != den) return false;
  if (root) *root = Rational(sn, sd);
  return true;
}

} // namespace

bool QuadraticField::is_real_irrational() const {
  Rational d = discriminant();
  return sgn(d) > 0 && !is_rational_square(d);
}

double QuadraticField::theta_double() const {
  return (to_double(S) + std::sqrt(to_double(discriminant()))) / 2.0;
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
  Rational n = o.norm();
  if (n == 0) fail(Errc::ZeroDenominator, "division by zero quadratic element");
  return (*this * o.conj()) / n;
}

QuadExt QuadExt::operator/(const Rational& r) const {
  if (r == 0) fail(Errc::ZeroDenominator, "division by zero rational");
  return {field_, a_ / r, b_ / r};
}

int QuadExt::sign() const {
  if (b_ == 0) return sgn(a_);
  // a + b*theta vs 0 with theta = (S + sqrt(D))/2:
  //   theta > t  <=>  2t - S < sqrt(D)  <=>  2t-S < 0  or  (2t-S)^2 < D.
  Rational t = -a_ / b_;
  Rational u = 2 * t - field_.S;
  bool theta_gt_t = sgn(u) < 0 || u * u < field_.discriminant();
  if (sgn(u) >= 0 && u * u == field_.discriminant())
    return 0; // theta rational and equal to t
  return (sgn(b_) > 0) == theta_gt_t ? 1 : -1;
}

double QuadExt::to_double() const {
  return drgt::to_double(a_) + drgt::to_double(b_) * field_.theta_double();
}

double QuadExt::double_error() const {
  double mag = std::fabs(drgt::to_double(a_)) +
               std::fabs(drgt::to_double(b_)) * (std::fabs(field_.theta_double()) + 1.0);
  return mag * 1e-14 + 1e-300;
}

} // namespace drgt
