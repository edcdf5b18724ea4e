#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace drgt {

/// Exact arbitrary-precision rational, always kept canonical (gcd 1, q > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

/// Integer value of an exact-integer rational; throws on non-integers or overflow.
long to_long(const Rational& r);

double to_double(const Rational& r);

/// Parses "p", "p/q", or a finite decimal such as "-1.25" (→ -5/4).
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "p" when q = 1, else "p/q".
std::string to_string(const Rational& r);

int sign(const Rational& r);

} // namespace drgt
