#pragma once

#include "drgt/rational.hpp"

#include <utility>
#include <vector>

namespace drgt {

/// Dense univariate polynomial over the rationals, coefficients low-to-high.
/// The zero polynomial is the empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly({v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  Poly derivative() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  /// Division with remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Exact division by (x - root); remainder must be zero.
  Poly deflate(const Rational& root) const;

  /// Scales by a positive rational so coefficients are coprime integers.
  Poly primitive() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Half-open isolating interval (lo, hi] holding exactly one real root,
/// or an exact root when lo == hi.
struct RootInterval {
  Rational lo, hi;
  bool is_exact() const { return lo == hi; }
};

/// Sturm chain of a squarefree polynomial; counts and isolates real roots.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  /// Number of sign variations at x.
  int variations(const Rational& x) const;
  /// Number of roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;

  const Poly& poly() const { return chain_.front(); }

 private:
  std::vector<Poly> chain_;
};

/// All real roots of a squarefree polynomial, isolated into disjoint
/// intervals, sorted increasing.
std::vector<RootInterval> isolate_real_roots(const Poly& p);

/// Shrinks an isolating interval until hi - lo <= width (or an exact root is hit).
RootInterval refine_root(const Poly& p, RootInterval iv, const Rational& width);

/// A bound B with all real roots in [-B, B] (Cauchy bound).
Rational root_bound(const Poly& p);

} // namespace drgt
