#include "drgt/tightness.hpp"

#include <cmath>
#include <sstream>

namespace drgt {

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Tight: return "Tight";
    case Classification::Bipartite: return "Bipartite";
    case Classification::NonTightSlack: return "NonTightSlack";
  }
  return "?";
}

namespace {

void require_d3(const IntersectionArray& g) {
  if (g.d() < 3)
    fail(Errc::PreconditionViolated, "tightness operations require diameter >= 3");
}

// Exact evaluation domain for expressions in the extremal eigenvalue pair.
struct Extremes {
  enum Kind { kRational, kQuad, kFloat } kind;
  Rational t1r, tdr;
  std::optional<QuadExt> t1q, tdq;
  Scalar t1s, tds;
};

Extremes extremes(const Spectrum& s) {
  const Eigenvalue& e1 = s.theta1();
  const Eigenvalue& ed = s.thetad();
  Extremes x;
  x.t1s = e1.value;
  x.tds = ed.value;
  if (e1.quad || ed.quad) {
    const QuadraticField* f1 = e1.quad ? &e1.quad->field() : nullptr;
    const QuadraticField* fd = ed.quad ? &ed.quad->field() : nullptr;
    if (f1 && fd && !(*f1 == *fd)) {
      x.kind = Extremes::kFloat;
      return x;
    }
    const QuadraticField& f = f1 ? *f1 : *fd;
    auto lift = [&](const Eigenvalue& e) -> std::optional<QuadExt> {
      if (e.quad) return e.quad;
      if (e.value.exact()) return QuadExt::constant(f, e.value.rational());
      return std::nullopt;
    };
    auto q1 = lift(e1), qd = lift(ed);
    if (q1 && qd) {
      x.kind = Extremes::kQuad;
      x.t1q = q1;
      x.tdq = qd;
      return x;
    }
    x.kind = Extremes::kFloat;
    return x;
  }
  if (e1.value.exact() && ed.value.exact()) {
    x.kind = Extremes::kRational;
    x.t1r = e1.value.rational();
    x.tdr = ed.value.rational();
    return x;
  }
  x.kind = Extremes::kFloat;
  return x;
}

} // namespace

FundamentalBound fundamental_bound(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  Rational A = Rational(g.k()) / (g.a(1) + 1);
  Rational rhs = Rational(-g.k()) * g.a(1) * g.b(1) / ((g.a(1) + 1) * Rational(g.a(1) + 1));

  FundamentalBound fb;
  fb.rhs = Scalar(rhs);
  Extremes x = extremes(s);
  switch (x.kind) {
    case Extremes::kRational:
      fb.lhs = Scalar(Rational((x.t1r + A) * (x.tdr + A)));
      fb.exact = true;
      break;
    case Extremes::kQuad: {
      // for a conjugate pair this reduces to the symmetric functions
      // theta_1+theta_d = S, theta_1*theta_d = -P and is exactly rational
      QuadExt v = (*x.t1q + A) * (*x.tdq + A);
      fb.lhs = Scalar::from_quad(v);
      fb.exact = v.is_rational();
      break;
    }
    case Extremes::kFloat:
      fb.lhs = (x.t1s + Scalar(A)) * (x.tds + Scalar(A));
      fb.exact = false;
      break;
  }
  fb.slack = fb.lhs - fb.rhs;
  return fb;
}

ClassifyResult classify(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  ClassifyResult r;
  r.fb = fundamental_bound(g, s);
  if (bipartite_test(g, s).is_bipartite) {
    r.classification = Classification::Bipartite;
    return r;
  }
  bool zero;
  if (r.fb.exact) {
    zero = r.fb.slack.rational() == 0;
  } else {
    zero = std::fabs(r.fb.slack.value()) < 1e-9;
    if (zero) r.numerically_tight = true;
  }
  r.classification = zero ? Classification::Tight : Classification::NonTightSlack;
  return r;
}

namespace {

void check_aux_bounds(long k, const Scalar& eps, const Scalar& t1, const Scalar& td) {
  Scalar abs_eps = eps.sign_tol() >= 0 ? eps : -eps;
  if (!(Scalar(1).definitely_less(abs_eps)))
    fail(Errc::AuxBoundViolation, "|eps| <= 1");
  Scalar k_over_t1 = Scalar(rat(k)) / t1;
  Scalar mk_over_td = Scalar(rat(-k)) / td;
  if (!abs_eps.definitely_less(k_over_t1))
    fail(Errc::AuxBoundViolation, "|eps| >= k/theta_1");
  if (!abs_eps.definitely_less(mk_over_td))
    fail(Errc::AuxBoundViolation, "|eps| >= -k/theta_d");
}

} // namespace

Scalar auxiliary_parameter(long k, const Scalar& theta, const Scalar& theta_prime) {
  if (theta.eq(theta_prime))
    fail(Errc::PreconditionViolated, "auxiliary parameter needs theta != theta'");
  Scalar kk(rat(k));
  Scalar eps = (kk * kk - theta * theta_prime) / (kk * (theta - theta_prime));
  Scalar t1 = theta_prime.definitely_less(theta) ? theta : theta_prime;
  Scalar td = theta_prime.definitely_less(theta) ? theta_prime : theta;
  check_aux_bounds(k, eps, t1, td);
  return eps;
}

AuxiliaryParameter auxiliary_parameter(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  AuxiliaryParameter out;
  out.attached_to_theta1 = true;
  Extremes x = extremes(s);
  long k = g.k();
  switch (x.kind) {
    case Extremes::kRational: {
      Rational e = (Rational(k) * k - x.t1r * x.tdr) / (Rational(k) * (x.t1r - x.tdr));
      out.epsilon = Scalar(e);
      break;
    }
    case Extremes::kQuad: {
      QuadExt num = Rational(Rational(k) * k) - (*x.t1q * *x.tdq);
      QuadExt den = (*x.t1q - *x.tdq) * Rational(k);
      QuadExt e = num / den;
      out.quad = e;
      out.epsilon = Scalar::from_quad(e);
      break;
    }
    case Extremes::kFloat: {
      Scalar kk(rat(k));
      out.epsilon = (kk * kk - x.t1s * x.tds) / (kk * (x.t1s - x.tds));
      break;
    }
  }
  check_aux_bounds(k, out.epsilon, x.t1s, x.tds);
  return out;
}

CosineSequence rho_from_sigma(const CosineSequence& sigma, const Scalar& epsilon) {
  auto rho = rho_from_sigma_values<Scalar>(sigma.sigma, epsilon, Scalar(1));
  // auxiliary-parameter identity, index by index
  for (size_t i = 1; i < rho.size(); ++i) {
    Scalar lhs = sigma.sigma[i] * rho[i] - sigma.sigma[i - 1] * rho[i - 1];
    Scalar rhs = epsilon * (sigma.sigma[i - 1] * rho[i] - rho[i - 1] * sigma.sigma[i]);
    if (!lhs.eq(rhs)) fail(Errc::Internal, "epsilon identity failed at i=" + std::to_string(i));
  }
  CosineSequence out;
  out.theta = Scalar(rat(1)); // caller re-attaches the complementary eigenvalue
  out.sigma = std::move(rho);
  return out;
}

bool feasibility(const CosineSequence& sigma, const Spectrum& s) {
  bool extremal = sigma.theta.eq(s.theta1().value) || sigma.theta.eq(s.thetad().value);
  if (!extremal) return false;
  int d = static_cast<int>(sigma.sigma.size()) - 1;
  for (int i = 1; i <= d - 1; ++i)
    if (sigma.sigma[i - 1].eq(sigma.sigma[i + 1])) return false;
  return true;
}

namespace {

Rational checked_div(const Rational& num, const Rational& den, const std::string& what) {
  if (den == 0) fail(Errc::PreconditionViolated, "zero denominator: " + what);
  return num / den;
}

ParametrizedArray finish_parametrized(std::vector<Rational> b, std::vector<Rational> c,
                                      const Rational& k) {
  ParametrizedArray out;
  out.b = std::move(b);
  out.c = std::move(c);
  out.k = k;
  int d = static_cast<int>(out.c.size());
  out.a.assign(d + 1, Rational(0));
  for (int i = 1; i <= d; ++i) {
    Rational bi = i < d ? out.b[i] : Rational(0);
    out.a[i] = k - out.c[i - 1] - bi;
  }
  out.integral = true;
  for (const auto& v : out.b)
    if (!is_integer(v) || sgn(v) <= 0) out.integral = false;
  for (const auto& v : out.c)
    if (!is_integer(v) || sgn(v) <= 0) out.integral = false;
  if (out.integral) {
    std::vector<long> bl, cl;
    for (const auto& v : out.b) bl.push_back(to_long(v));
    for (const auto& v : out.c) cl.push_back(to_long(v));
    if (!check_array(bl, cl)) out.array = IntersectionArray(bl, cl);
  }
  return out;
}

} // namespace

std::string ParametrizedArray::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << to_string(b[i]);
  os << ";";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << to_string(c[i]);
  return os.str();
}

ParametrizeResult parametrize(const std::vector<Rational>& sigma, const Rational& epsilon) {
  int d = static_cast<int>(sigma.size()) - 1;
  if (d < 3) fail(Errc::PreconditionViolated, "need a cosine sequence of diameter >= 3");
  if (sigma[0] != 1) fail(Errc::PreconditionViolated, "sigma_0 = 1 fails");
  const Rational& s1 = sigma[1];
  const Rational& s2 = sigma[2];
  if (sigma[d - 1] != s1 * sigma[d])
    fail(Errc::PreconditionViolated, "sigma_{d-1} = sigma * sigma_d fails");
  if (epsilon == -1) fail(Errc::PreconditionViolated, "epsilon = -1");

  Rational h = checked_div((1 - s1) * (1 - s2), (s1 * s1 - s2) * (1 - epsilon * s1),
                           "(sigma^2 - sigma_2)(1 - eps sigma)");
  Rational g = checked_div((epsilon - 1) * (1 - s2), (s1 * s1 - s2) * (1 - epsilon * s1),
                           "(sigma^2 - sigma_2)(1 - eps sigma)");
  Rational k = checked_div(h * (s1 - epsilon), s1 - 1, "sigma - 1");

  std::vector<Rational> b(d), c(d);
  b[0] = k;
  for (int i = 1; i <= d - 1; ++i) {
    Rational dn_b = (sigma[i - 1] - sigma[i + 1]) * (sigma[i + 1] - sigma[i]);
    b[i] = checked_div(h * (sigma[i - 1] - s1 * sigma[i]) * (sigma[i + 1] - epsilon * sigma[i]),
                       dn_b, "(sigma_{i-1}-sigma_{i+1})(sigma_{i+1}-sigma_i) at i=" +
                                 std::to_string(i));
    Rational dn_c = (sigma[i + 1] - sigma[i - 1]) * (sigma[i - 1] - sigma[i]);
    c[i - 1] = i == 1 ? Rational(1)
                      : checked_div(h * (sigma[i + 1] - s1 * sigma[i]) *
                                        (sigma[i - 1] - epsilon * sigma[i]),
                                    dn_c,
                                    "(sigma_{i+1}-sigma_{i-1})(sigma_{i-1}-sigma_i) at i=" +
                                        std::to_string(i));
  }
  // c_1 from the same formula must collapse to 1
  {
    Rational dn_c = (sigma[2] - sigma[0]) * (sigma[0] - sigma[1]);
    Rational c1 = checked_div(h * (sigma[2] - s1 * sigma[1]) * (sigma[0] - epsilon * sigma[1]),
                              dn_c, "c_1 denominator");
    if (c1 != 1) fail(Errc::Internal, "parametrization gives c_1 = " + to_string(c1));
  }
  c[d - 1] = k; // c_d = k, hence a_d = 0

  ParametrizeResult out;
  out.arr = finish_parametrized(std::move(b), std::move(c), k);
  out.h = h;
  out.g = g;

  // a_i must match the closed form with factor g
  for (int i = 1; i <= d - 1; ++i) {
    Rational num = (sigma[i + 1] - s1 * sigma[i]) * (sigma[i - 1] - s1 * sigma[i]);
    Rational den = (sigma[i + 1] - sigma[i]) * (sigma[i - 1] - sigma[i]);
    if (out.arr.a[i] != g * checked_div(num, den, "a_i denominator"))
      fail(Errc::Internal, "a_i closed form mismatch at i=" + std::to_string(i));
  }

  Rational other = checked_div(1 - s2, s2 - s1 * s1, "sigma_2 - sigma^2");
  Rational own = checked_div(s1 * (s1 - epsilon) * (1 - s2), (1 - epsilon * s1) * (s2 - s1 * s1),
                             "(1 - eps sigma)(sigma_2 - sigma^2)");
  if (own != k * s1) fail(Errc::Internal, "theta = k sigma fails");
  if (sgn(epsilon) > 0) {
    out.theta1 = Scalar(own);
    out.thetad = Scalar(other);
  } else {
    out.theta1 = Scalar(other);
    out.thetad = Scalar(own);
  }
  return out;
}

ParametrizedArray two_eigenvalue_parametrize(const std::vector<Rational>& sigma,
                                             const std::vector<Rational>& rho) {
  int d = static_cast<int>(sigma.size()) - 1;
  if (d < 3 || rho.size() != sigma.size())
    fail(Errc::PreconditionViolated, "need two sequences of equal diameter >= 3");
  const Rational &s1 = sigma[1], &s2 = sigma[2], &r1 = rho[1], &r2 = rho[2];

  Rational kden = (r1 - r2) * (1 - s1) * s1 - (s1 - s2) * (1 - r1) * r1;
  if (kden == 0) fail(Errc::ZeroDenominator, "k denominator (index 0)");
  Rational k = ((s1 - s2) * (1 - r1) - (r1 - r2) * (1 - s1)) / kden;

  std::vector<Rational> b(d), c(d);
  b[0] = k;
  for (int i = 1; i <= d - 1; ++i) {
    Rational D = (rho[i] - rho[i + 1]) * (sigma[i - 1] - sigma[i]) -
                 (sigma[i] - sigma[i + 1]) * (rho[i - 1] - rho[i]);
    if (D == 0) fail(Errc::ZeroDenominator, "D_i at index " + std::to_string(i));
    b[i] = k * ((sigma[i - 1] - sigma[i]) * (1 - r1) * rho[i] -
                (rho[i - 1] - rho[i]) * (1 - s1) * sigma[i]) /
           D;
    c[i - 1] = i == 1 ? Rational(1)
                      : k *
                            ((sigma[i] - sigma[i + 1]) * (1 - r1) * rho[i] -
                             (rho[i] - rho[i + 1]) * (1 - s1) * sigma[i]) /
                            D;
  }
  // c_i formula at i = 1 must collapse to c_1 = 1
  {
    Rational D = (rho[1] - rho[2]) * (sigma[0] - sigma[1]) -
                 (sigma[1] - sigma[2]) * (rho[0] - rho[1]);
    if (D == 0) fail(Errc::ZeroDenominator, "D_1");
    Rational c1 =
        k * ((sigma[1] - sigma[2]) * (1 - r1) * rho[1] - (rho[1] - rho[2]) * (1 - s1) * sigma[1]) /
        D;
    if (c1 != 1)
      fail(Errc::PreconditionViolated, "sequences give c_1 = " + to_string(c1) + ", not 1");
  }

  if (sigma[d - 1] == sigma[d]) fail(Errc::ZeroDenominator, "sigma_{d-1} - sigma_d");
  if (rho[d - 1] == rho[d]) fail(Errc::ZeroDenominator, "rho_{d-1} - rho_d");
  Rational cd_sigma = k * sigma[d] * (s1 - 1) / (sigma[d - 1] - sigma[d]);
  Rational cd_rho = k * rho[d] * (r1 - 1) / (rho[d - 1] - rho[d]);
  if (cd_sigma != cd_rho)
    fail(Errc::PreconditionViolated,
         "the two c_d expressions disagree: " + to_string(cd_sigma) + " vs " + to_string(cd_rho));
  c[d - 1] = cd_sigma;

  return finish_parametrized(std::move(b), std::move(c), k);
}

namespace {

template <class F>
F f_bound_expr(const IntersectionArray& g, const F& theta, const F& one) {
  Rational a1p1 = rat(g.a(1) + 1);
  F num = (theta * a1p1 + rat(g.k())) * rat(g.b(1));
  F den = (theta + rat(g.k())) * (theta + rat(1));
  return (num / den) * one;
}

} // namespace

std::pair<Scalar, Scalar> f_bounds(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  if (g.a(1) == 0) fail(Errc::A1Zero, "f is undefined when a_1 = 0");
  Extremes x = extremes(s);
  switch (x.kind) {
    case Extremes::kRational: {
      Rational lo = f_bound_expr<Rational>(g, x.tdr, 1);
      Rational hi = f_bound_expr<Rational>(g, x.t1r, 1);
      return {Scalar(lo), Scalar(hi)};
    }
    case Extremes::kQuad: {
      QuadExt one = QuadExt::constant(x.t1q->field(), 1);
      return {Scalar::from_quad(f_bound_expr<QuadExt>(g, *x.tdq, one)),
              Scalar::from_quad(f_bound_expr<QuadExt>(g, *x.t1q, one))};
    }
    case Extremes::kFloat:
    default:
      return {f_bound_expr<Scalar>(g, x.tds, Scalar(1)), f_bound_expr<Scalar>(g, x.t1s, Scalar(1))};
  }
}

std::pair<Scalar, Scalar> b_plus_minus(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  Rational b1 = rat(g.b(1));
  Extremes x = extremes(s);
  switch (x.kind) {
    case Extremes::kRational: {
      Rational bm = -1 - b1 / (1 + x.t1r);
      Rational bp = -1 - b1 / (1 + x.tdr);
      return {Scalar(bp), Scalar(bm)};
    }
    case Extremes::kQuad: {
      QuadExt one = QuadExt::constant(x.t1q->field(), 1);
      QuadExt bm = -(one + one * b1 / (*x.t1q + rat(1)));
      QuadExt bp = -(one + one * b1 / (*x.tdq + rat(1)));
      return {Scalar::from_quad(bp), Scalar::from_quad(bm)};
    }
    case Extremes::kFloat:
    default: {
      Scalar one(1);
      Scalar bm = Scalar(0) - one - Scalar(b1) / (one + x.t1s);
      Scalar bp = Scalar(0) - one - Scalar(b1) / (one + x.tds);
      return {bp, bm};
    }
  }
}

namespace {

template <class F>
struct SRGValues {
  F kappa, lambda, mu, r, s, mult_r, mult_s;
};

template <class F>
SRGValues<F> local_srg_formulas(const std::vector<F>& sig, const F& eps, const F& one) {
  const F& s1 = sig[1];
  const F& s2 = sig[2];
  SRGValues<F> v{one, one, one, one, one, one, one};
  F one_p = one + s1;
  F one_m = one - s1;
  F sm2 = s1 - s2;
  v.kappa = -(((one - s2) * one_p * (one - eps)) / (sm2 * (one - eps * s1)));
  v.lambda = v.kappa * (s1 + s1) / one_p - v.kappa * (one_m / one_p) * (s2 / sm2) -
             (one - s2) / sm2;
  v.mu = (v.kappa / one_p) * ((s1 * s1 - s2) / sm2);
  v.r = v.kappa * s1 / one_p;
  v.s = -((one - s2) / sm2);
  F s2_minus_sq = s2 - s1 * s1;
  v.mult_r = one_p * (s1 - eps) / s2_minus_sq;
  v.mult_s = -((one - eps) * one_p * (s2 - eps * s1)) / (s2_minus_sq * (one - eps * s1));
  return v;
}

} // namespace

LocalSRG local_srg(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  auto cls = classify(g, s);
  if (cls.classification != Classification::Tight)
    fail(Errc::NotTight, "local SRG parameters are defined for tight graphs only");

  LocalSRG out;
  out.nu = Scalar(rat(g.k()));
  Extremes x = extremes(s);
  auto bpm = b_plus_minus(g, s);

  auto fill = [&](auto values, auto to_scalar) {
    out.kappa = to_scalar(values.kappa);
    out.lambda = to_scalar(values.lambda);
    out.mu = to_scalar(values.mu);
    out.r = to_scalar(values.r);
    out.s = to_scalar(values.s);
    out.mult_r = to_scalar(values.mult_r);
    out.mult_s = to_scalar(values.mult_s);
  };

  switch (x.kind) {
    case Extremes::kRational: {
      auto sig = cosine_rational(g, x.t1r);
      Rational eps = (Rational(g.k()) * g.k() - x.t1r * x.tdr) / (Rational(g.k()) * (x.t1r - x.tdr));
      auto v = local_srg_formulas<Rational>(sig, eps, 1);
      fill(v, [](const Rational& q) { return Scalar(q); });
      break;
    }
    case Extremes::kQuad: {
      auto sig = cosine_quad(g, *x.t1q);
      QuadExt one = QuadExt::constant(x.t1q->field(), 1);
      QuadExt eps = (one * Rational(Rational(g.k()) * g.k()) - (*x.t1q * *x.tdq)) /
                    ((*x.t1q - *x.tdq) * Rational(g.k()));
      auto v = local_srg_formulas<QuadExt>(sig, eps, one);
      fill(v, [](const QuadExt& q) { return Scalar::from_quad(q); });
      out.r_quad = v.r;
      out.s_quad = v.s;
      break;
    }
    case Extremes::kFloat: {
      auto sig = cosine_values<Scalar>(g, x.t1s, Scalar(1));
      Scalar kk(rat(g.k()));
      Scalar eps = (kk * kk - x.t1s * x.tds) / (kk * (x.t1s - x.tds));
      auto v = local_srg_formulas<Scalar>(sig, eps, Scalar(1));
      fill(v, [](const Scalar& q) { return q; });
      break;
    }
  }

  // cross-assertions: these are identities for tight graphs
  if (!out.kappa.eq(Scalar(rat(g.a(1))))) fail(Errc::Internal, "kappa != a_1");
  if (!out.lambda.eq(out.kappa + out.r + out.s + out.r * out.s))
    fail(Errc::Internal, "lambda != kappa + r + s + rs");
  if (!out.mu.eq(out.kappa + out.r * out.s)) fail(Errc::Internal, "mu != kappa + rs");
  if (out.mu.sign_tol() == 0) fail(Errc::Internal, "mu = 0 for a tight graph");
  if (!out.r.eq(bpm.first)) fail(Errc::Internal, "r != b+");
  if (!out.s.eq(bpm.second)) fail(Errc::Internal, "s != b-");
  if (!(out.mult_r + out.mult_s + Scalar(1)).eq(out.nu))
    fail(Errc::Internal, "multiplicities do not sum to nu");
  if (!(out.mult_r * out.r + out.mult_s * out.s + out.kappa).is_zero())
    fail(Errc::Internal, "local trace identity fails");
  return out;
}

bool is_antipodal_array(const IntersectionArray& g) {
  int d = g.d();
  for (int i = 0; i <= d - 1; ++i) {
    if (i == d / 2) continue;
    if (g.b(i) != g.c(d - i)) return false;
  }
  return true;
}

std::optional<std::array<long, 3>> at4_label(const IntersectionArray& g, const Spectrum& s,
                                             const LocalSRG& local) {
  if (g.d() != 4) return std::nullopt;
  if (!is_antipodal_array(g)) return std::nullopt;
  Integer t = g.k_i(4) + 1;
  if (g.n() % t != 0) return std::nullopt;
  if (!local.r.exact() || !local.s.exact()) return std::nullopt;
  if (!is_integer(local.r.rational()) || !is_integer(local.s.rational())) return std::nullopt;
  (void)s;
  return std::array<long, 3>{to_long(local.r.rational()), -to_long(local.s.rational()),
                             to_long(Rational(t))};
}

TightnessReport tightness_report(const IntersectionArray& g, const Spectrum& s) {
  require_d3(g);
  TightnessReport rep;
  auto cls = classify(g, s);
  rep.fb = cls.fb;
  rep.classification = cls.classification;
  rep.numerically_tight = cls.numerically_tight;
  auto bpm = b_plus_minus(g, s);
  rep.b_plus = bpm.first;
  rep.b_minus = bpm.second;
  if (g.a(1) != 0) rep.f = f_bounds(g, s);
  if (cls.classification == Classification::Tight) {
    rep.epsilon = auxiliary_parameter(g, s);
    rep.local = local_srg(g, s);
    rep.at4 = at4_label(g, s, *rep.local);
  }
  return rep;
}

} // namespace drgt
