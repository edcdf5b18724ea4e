#include "drgt/spectrum.hpp"

#include "drgt/cosine.hpp"
#include "drgt/error.hpp"

#include <algorithm>
#include <cmath>

namespace drgt {

Poly characteristic_polynomial(const IntersectionArray& g) {
  int d = g.d();
  // leading principal minors of xI - B: M_{i+1} = (x - a_i) M_i - b_{i-1} c_i M_{i-1}
  Poly prev = Poly::constant(1);
  Poly cur({rat(-g.a(0)), rat(1)});
  for (int i = 1; i <= d; ++i) {
    Poly x_minus_ai({rat(-g.a(i)), rat(1)});
    Poly next = x_minus_ai * cur - prev * rat(g.b(i - 1) * g.c(i));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

struct RootRec {
  Scalar value;
  std::optional<QuadExt> quad;
  double approx; // for ordering
};

long multiplicity_exact_rational(const IntersectionArray& g, const Rational& theta) {
  auto sig = cosine_rational(g, theta);
  Rational denom = 0;
  for (int i = 0; i <= g.d(); ++i) denom += Rational(g.k_i(i)) * sig[i] * sig[i];
  Rational m = Rational(g.n()) / denom;
  if (!is_integer(m) || sgn(m) <= 0)
    fail(Errc::MultiplicityNotIntegral,
         "m(" + to_string(theta) + ") = " + to_string(m) + " for {" + g.str() + "}");
  return to_long(m);
}

long multiplicity_exact_quad(const IntersectionArray& g, const QuadExt& theta) {
  auto sig = cosine_quad(g, theta);
  QuadExt denom = QuadExt::constant(theta.field(), 0);
  for (int i = 0; i <= g.d(); ++i) denom = denom + sig[i] * sig[i] * Rational(g.k_i(i));
  if (!denom.is_rational())
    fail(Errc::MultiplicityNotIntegral,
         "m(theta) irrational for quadratic eigenvalue of {" + g.str() + "}");
  Rational m = Rational(g.n()) / denom.rat_part();
  if (!is_integer(m) || sgn(m) <= 0)
    fail(Errc::MultiplicityNotIntegral, "m = " + to_string(m) + " for {" + g.str() + "}");
  return to_long(m);
}

long multiplicity_float(const IntersectionArray& g, double theta, const char* label) {
  int d = g.d();
  std::vector<double> s(d + 1);
  s[0] = 1.0;
  s[1] = theta / static_cast<double>(g.k());
  for (int i = 1; i < d; ++i)
    s[i + 1] = ((theta - g.a(i)) * s[i] - g.c(i) * s[i - 1]) / g.b(i);
  double denom = 0;
  for (int i = 0; i <= d; ++i) denom += g.k_i(i).get_d() * s[i] * s[i];
  double m = g.n().get_d() / denom;
  double r = std::round(m);
  if (std::fabs(m - r) > 1e-6 || r < 1)
    fail(Errc::MultiplicityNotIntegral,
         std::string("m(") + label + ") = " + std::to_string(m) + " for {" + g.str() + "}");
  return static_cast<long>(r);
}

} // namespace

std::optional<QuadraticField> Spectrum::extremal_pair_field() const {
  const Eigenvalue& t1 = theta1();
  const Eigenvalue& td = thetad();
  if (!t1.quad || !td.quad) return std::nullopt;
  if (!(t1.quad->field() == td.quad->field())) return std::nullopt;
  if (*t1.quad == QuadExt::generator(t1.quad->field()) &&
      *td.quad == QuadExt::cogenerator(td.quad->field()))
    return t1.quad->field();
  return std::nullopt;
}

Spectrum spectrum(const IntersectionArray& g) {
  int d = g.d();
  Poly p = characteristic_polynomial(g);

  std::vector<RootRec> roots;

  // exact rational roots first (monic integral polynomial: they are integers)
  Poly residual = p;
  auto intervals = isolate_real_roots(residual);
  if (static_cast<int>(intervals.size()) != d + 1)
    fail(Errc::Internal, "expected " + std::to_string(d + 1) + " real roots");
  bool deflated = true;
  while (deflated && residual.degree() > 0) {
    deflated = false;
    for (const auto& iv0 : isolate_real_roots(residual)) {
      auto iv = refine_root(residual, iv0, rat(1, 4));
      std::optional<Rational> hit;
      if (iv.is_exact()) {
        hit = iv.lo;
      } else {
        // width <= 1/4: at most one integer t with lo < t <= hi
        Integer t;
        mpz_cdiv_q(t.get_mpz_t(), numerator(iv.lo).get_mpz_t(), denominator(iv.lo).get_mpz_t());
        Rational cand(t);
        if (iv.lo < cand && cand <= iv.hi && residual.eval(cand) == 0) hit = cand;
      }
      if (hit) {
        roots.push_back({Scalar(*hit), std::nullopt, to_double(*hit)});
        residual = residual.deflate(*hit);
        deflated = true;
        break;
      }
    }
  }

  if (residual.degree() == 2) {
    // x^2 + ux + v, irrational conjugate pair theta^2 = S theta + P
    QuadraticField f{-residual[1], -residual[0]};
    if (!f.is_real_irrational()) fail(Errc::Internal, "quadratic residual not real irrational");
    QuadExt hi = QuadExt::generator(f), lo = QuadExt::cogenerator(f);
    roots.push_back({Scalar::from_quad(hi), hi, hi.to_double()});
    roots.push_back({Scalar::from_quad(lo), lo, lo.to_double()});
  } else if (residual.degree() > 2) {
    for (const auto& iv0 : isolate_real_roots(residual)) {
      auto iv = refine_root(residual, iv0, Rational(Integer(1), Integer("1000000000000")));
      if (iv.is_exact()) {
        roots.push_back({Scalar(iv.lo), std::nullopt, to_double(iv.lo)});
      } else {
        double mid = to_double((iv.lo + iv.hi) / 2);
        double err = to_double(iv.hi - iv.lo) + 1e-15 * (1.0 + std::fabs(mid));
        roots.push_back({Scalar::approx(mid, err), std::nullopt, mid});
      }
    }
  }

  if (static_cast<int>(roots.size()) != d + 1)
    fail(Errc::Internal, "root count mismatch");
  std::sort(roots.begin(), roots.end(),
            [](const RootRec& a, const RootRec& b) { return a.approx > b.approx; });

  if (!roots[0].value.exact() || roots[0].value.rational() != g.k())
    fail(Errc::Internal, "theta_0 != k");

  // range bounds for the second-largest and least eigenvalue
  if (d >= 3) {
    const Scalar& t1 = roots[1].value;
    const Scalar& td = roots[d].value;
    bool ok = Scalar(0).definitely_less(t1) || t1.sign_tol() > 0;
    if (!ok) fail(Errc::InvalidArray, "theta_1 <= 0 in {" + g.str() + "} (not realizable)");
    if (!(td.definitely_less(Scalar(-1)) || (td - Scalar(-1)).sign_tol() < 0))
      fail(Errc::InvalidArray, "theta_d >= -1 in {" + g.str() + "} (not realizable)");
    Scalar lower = Scalar(g.a(1) - g.k());
    if (td.definitely_less(lower) && !td.eq(lower))
      fail(Errc::InvalidArray, "theta_d < a_1 - k in {" + g.str() + "} (not realizable)");
  }

  std::vector<Eigenvalue> eigs;
  eigs.reserve(d + 1);
  for (const auto& r : roots) {
    long m;
    if (r.quad)
      m = multiplicity_exact_quad(g, *r.quad);
    else if (r.value.exact())
      m = multiplicity_exact_rational(g, r.value.rational());
    else
      m = multiplicity_float(g, r.value.value(), r.value.str().c_str());
    eigs.push_back({r.value, m, r.quad});
  }

  if (eigs[0].multiplicity != 1) fail(Errc::Internal, "m_0 != 1");

  // trace identities: sum m = n, sum m theta = 0, sum m theta^2 = n k
  Scalar sum_m(0), sum_mt(0), sum_mt2(0);
  for (const auto& e : eigs) {
    Scalar m(rat(e.multiplicity));
    sum_m = sum_m + m;
    sum_mt = sum_mt + m * e.value;
    sum_mt2 = sum_mt2 + m * e.value * e.value;
  }
  if (!sum_m.eq(Scalar(Rational(g.n()))) || !sum_mt.is_zero() ||
      !sum_mt2.eq(Scalar(Rational(g.n() * g.k()))))
    fail(Errc::MultiplicityNotIntegral, "trace identities fail for {" + g.str() + "}");

  return Spectrum(std::move(eigs));
}

} // namespace drgt
