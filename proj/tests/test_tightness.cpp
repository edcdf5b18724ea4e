#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drgt/catalog.hpp"
#include "drgt/cosine.hpp"
#include "drgt/error.hpp"
#include "drgt/spectrum.hpp"
#include "drgt/tightness.hpp"

using namespace drgt;

namespace {
IntersectionArray arr(const char* s) { return IntersectionArray::parse(s); }

std::vector<Rational> rationals(const std::vector<Scalar>& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(x.rational());
  return out;
}
} // namespace

TEST_CASE("fundamental bound values") {
  auto j = arr("16,9,4,1;1,4,9,16");
  auto fb = fundamental_bound(j, spectrum(j));
  CHECK(fb.exact);
  CHECK(fb.lhs.rational() == rat(-864, 49));
  CHECK(fb.rhs.rational() == rat(-864, 49));
  CHECK(fb.slack.rational() == 0);

  // conjugate quadratic pair, decided through the symmetric functions
  auto ico = arr("5,2,1;1,2,5");
  auto fbi = fundamental_bound(ico, spectrum(ico));
  CHECK(fbi.exact);
  CHECK(fbi.lhs.rational() == rat(-20, 9));
  CHECK(fbi.slack.rational() == 0);

  // bipartite: both sides zero
  auto cube = arr("4,3,2,1;1,2,3,4");
  auto fbc = fundamental_bound(cube, spectrum(cube));
  CHECK(fbc.lhs.rational() == 0);
  CHECK(fbc.rhs.rational() == 0);

  auto h33 = arr("6,4,2;1,2,3");
  auto fbh = fundamental_bound(h33, spectrum(h33));
  CHECK(fbh.slack.rational() == 6);
}

TEST_CASE("classification") {
  auto cs = arr("10,6,4,1;1,2,6,10");
  CHECK(classify(cs, spectrum(cs)).classification == Classification::Tight);
  auto cube = arr("4,3,2,1;1,2,3,4");
  CHECK(classify(cube, spectrum(cube)).classification == Classification::Bipartite);
  auto h33 = arr("6,4,2;1,2,3");
  auto r = classify(h33, spectrum(h33));
  CHECK(r.classification == Classification::NonTightSlack);
  CHECK(r.fb.slack.rational() == 6);
  // formal array with integral multiplicities but negative slack: reported,
  // not crashed (negative slack proves no such graph exists)
  auto bogus = arr("24,9,8;1,8,12");
  auto rb = classify(bogus, spectrum(bogus));
  CHECK(rb.classification == Classification::NonTightSlack);
  CHECK(rb.fb.slack.rational() == -24);
  // diameter 2 is accepted by the core but rejected here
  IntersectionArray petersen({3, 2}, {1, 1});
  CHECK_THROWS_AS(classify(petersen, spectrum(petersen)), Error);
}

TEST_CASE("auxiliary parameter") {
  auto j = arr("16,9,4,1;1,4,9,16");
  auto eps = auxiliary_parameter(j, spectrum(j));
  CHECK(eps.epsilon.rational() == rat(3, 2));
  CHECK(eps.attached_to_theta1);

  auto cs = arr("10,6,4,1;1,2,6,10");
  CHECK(auxiliary_parameter(cs, spectrum(cs)).epsilon.rational() == rat(4, 3));

  // scalar-level: (k^2 - tt')/(k(t - t')) and its antisymmetry
  CHECK(auxiliary_parameter(16, Scalar(8), Scalar(-4)).rational() == rat(3, 2));
  CHECK(auxiliary_parameter(16, Scalar(-4), Scalar(8)).rational() == rat(-3, 2));
  CHECK(auxiliary_parameter(10, Scalar(5), Scalar(-4)).rational() == rat(4, 3));

  // the bounds are asserted: the hypercube pair gives |eps| = 1 exactly
  CHECK_THROWS_AS(auxiliary_parameter(4, Scalar(2), Scalar(-4)), Error);
}

TEST_CASE("rho from sigma") {
  // Conway-Smith table row
  std::vector<Rational> sig{rat(1), rat(1, 2), rat(0), rat(-1, 4), rat(-1, 2)};
  auto rho = rho_from_sigma_values<Rational>(sig, rat(4, 3), 1);
  std::vector<Rational> want{rat(1), rat(-2, 5), rat(3, 10), rat(-2, 5), rat(1)};
  CHECK(rho == want);
  CHECK(rho[0] == 1); // empty product

  // J(8,4): must reproduce the theta_d cosine sequence
  auto j = arr("16,9,4,1;1,4,9,16");
  std::vector<Rational> sj{rat(1), rat(1, 2), rat(0), rat(-1, 2), rat(-1)};
  auto rj = rho_from_sigma_values<Rational>(sj, rat(3, 2), 1);
  CHECK(rj == cosine_rational(j, rat(-4)));

  // Scalar interface performs the identity check as it goes
  auto s = spectrum(j);
  auto seq = cosine_sequence(j, s.theta1());
  auto out = rho_from_sigma(seq, Scalar(rat(3, 2)));
  for (int i = 0; i <= 4; ++i) CHECK(out.sigma[i].rational() == rj[i]);

  // degenerate denominator names the index
  std::vector<Rational> degen{rat(1), rat(1, 2), rat(1, 4)};
  CHECK_THROWS_AS(rho_from_sigma_values<Rational>(degen, rat(1, 2), 1), Error);
}

TEST_CASE("feasibility") {
  auto j = arr("16,9,4,1;1,4,9,16");
  auto s = spectrum(j);
  CHECK(feasibility(cosine_sequence(j, s.theta1()), s));
  // theta_d sequence has sigma_1 = sigma_3 = -1/4
  CHECK(!feasibility(cosine_sequence(j, s.thetad()), s));
  // middle eigenvalues are never feasible
  CHECK(!feasibility(cosine_sequence(j, s.theta(2)), s));

  auto cs = arr("10,6,4,1;1,2,6,10");
  auto scs = spectrum(cs);
  CHECK(feasibility(cosine_sequence(cs, scs.theta1()), scs));

  // Patterson's theta_d sequence is feasible
  auto pat = arr("280,243,144,10;1,8,90,280");
  auto sp = spectrum(pat);
  CHECK(feasibility(cosine_sequence(pat, sp.thetad()), sp));
}

TEST_CASE("parametrization from (sigma, epsilon)") {
  // J(8,4)
  std::vector<Rational> sj{rat(1), rat(1, 2), rat(0), rat(-1, 2), rat(-1)};
  auto res = parametrize(sj, rat(3, 2));
  CHECK(res.h == 8);
  CHECK(res.g == 8);
  CHECK(res.arr.integral);
  REQUIRE(res.arr.array.has_value());
  CHECK(res.arr.array->str() == "16,9,4,1;1,4,9,16");
  CHECK(res.theta1.rational() == 8);
  CHECK(res.thetad.rational() == -4);
  CHECK(res.arr.a[1] == 6);

  // Conway-Smith
  std::vector<Rational> sc{rat(1), rat(1, 2), rat(0), rat(-1, 4), rat(-1, 2)};
  auto rc = parametrize(sc, rat(4, 3));
  CHECK(rc.h == 6);
  CHECK(rc.g == 4);
  REQUIRE(rc.arr.array.has_value());
  CHECK(rc.arr.array->str() == "10,6,4,1;1,2,6,10");

  // preconditions are named
  CHECK_THROWS_AS(parametrize({rat(2), rat(1, 2), rat(0), rat(-1, 2)}, rat(3, 2)), Error);
  CHECK_THROWS_AS(parametrize(sj, rat(-1)), Error);
  std::vector<Rational> bad_tail{rat(1), rat(1, 2), rat(0), rat(-1, 3), rat(-1)};
  CHECK_THROWS_AS(parametrize(bad_tail, rat(3, 2)), Error); // sigma_{d-1} != sigma sigma_d
}

TEST_CASE("round trip on every tight catalog entry") {
  for (const auto& e : catalog()) {
    if (e.quad) continue; // irrational sigma: the exact path is rational-only
    auto s = spectrum(e.array);
    auto sig = rationals(e.sigma);
    auto eps = e.epsilon.rational();
    auto res = parametrize(sig, eps);
    REQUIRE(res.arr.array.has_value());
    CHECK(*res.arr.array == e.array);
    CHECK(res.theta1.rational() == s.theta1().value.rational());
    CHECK(res.thetad.rational() == s.thetad().value.rational());

    auto two = two_eigenvalue_parametrize(sig, rationals(e.rho));
    REQUIRE(two.array.has_value());
    CHECK(*two.array == e.array);
  }
}

TEST_CASE("two-eigenvalue parametrization") {
  std::vector<Rational> sj{rat(1), rat(1, 2), rat(0), rat(-1, 2), rat(-1)};
  std::vector<Rational> rj{rat(1), rat(-1, 4), rat(1, 6), rat(-1, 4), rat(1)};
  auto out = two_eigenvalue_parametrize(sj, rj);
  REQUIRE(out.array.has_value());
  CHECK(out.array->str() == "16,9,4,1;1,4,9,16");

  std::vector<Rational> sc{rat(1), rat(1, 2), rat(0), rat(-1, 4), rat(-1, 2)};
  std::vector<Rational> rc{rat(1), rat(-2, 5), rat(3, 10), rat(-2, 5), rat(1)};
  auto out2 = two_eigenvalue_parametrize(sc, rc);
  REQUIRE(out2.array.has_value());
  CHECK(out2.array->str() == "10,6,4,1;1,2,6,10");

  // identical sequences collapse every denominator
  CHECK_THROWS_AS(two_eigenvalue_parametrize(sj, sj), Error);
  // a mixed pair from two different graphs cannot reproduce either array
  auto mixed = two_eigenvalue_parametrize(sj, rc);
  CHECK(mixed.str() != "16,9,4,1;1,4,9,16");
  CHECK(mixed.str() != "10,6,4,1;1,2,6,10");
}

TEST_CASE("f bounds") {
  auto j = arr("16,9,4,1;1,4,9,16");
  auto [lo, hi] = f_bounds(j, spectrum(j));
  CHECK(lo.rational() == 3);
  CHECK(hi.rational() == 3);

  auto cs = arr("10,6,4,1;1,2,6,10");
  auto [lo2, hi2] = f_bounds(cs, spectrum(cs));
  CHECK(lo2.rational() == 2);
  CHECK(hi2.rational() == 2);

  auto h33 = arr("6,4,2;1,2,3");
  auto [lo3, hi3] = f_bounds(h33, spectrum(h33));
  CHECK(lo3.rational() == 0);
  CHECK(hi3.rational() == rat(4, 3));

  // exact rational even for the quadratic pair
  auto ico = arr("5,2,1;1,2,5");
  auto [lo4, hi4] = f_bounds(ico, spectrum(ico));
  CHECK(lo4.rational() == 1);
  CHECK(hi4.rational() == 1);

  auto cube = arr("4,3,2,1;1,2,3,4");
  CHECK_THROWS_AS(f_bounds(cube, spectrum(cube)), Error); // a_1 = 0
}

TEST_CASE("local strongly regular parameters") {
  auto cs = arr("10,6,4,1;1,2,6,10");
  auto l = local_srg(cs, spectrum(cs));
  CHECK(l.nu.rational() == 10);
  CHECK(l.kappa.rational() == 3);
  CHECK(l.lambda.rational() == 0);
  CHECK(l.mu.rational() == 1);
  CHECK(l.r.rational() == 1);
  CHECK(l.s.rational() == -2);
  CHECK(l.mult_r.rational() == 5);
  CHECK(l.mult_s.rational() == 4);

  auto j = arr("16,9,4,1;1,4,9,16");
  auto lj = local_srg(j, spectrum(j));
  CHECK(lj.lambda.rational() == 2);
  CHECK(lj.mu.rational() == 2);
  CHECK(lj.r.rational() == 2);
  CHECK(lj.s.rational() == -2);

  auto hc = arr("28,15,6,1;1,6,15,28");
  auto lh = local_srg(hc, spectrum(hc));
  CHECK(lh.nu.rational() == 28);
  CHECK(lh.kappa.rational() == 12);
  CHECK(lh.lambda.rational() == 6);
  CHECK(lh.mu.rational() == 4);
  CHECK(lh.r.rational() == 4);
  CHECK(lh.s.rational() == -2);

  auto h33 = arr("6,4,2;1,2,3");
  CHECK_THROWS_AS(local_srg(h33, spectrum(h33)), Error); // NotTight
}

TEST_CASE("b plus and minus") {
  auto cs = arr("10,6,4,1;1,2,6,10");
  auto [bp, bm] = b_plus_minus(cs, spectrum(cs));
  CHECK(bp.rational() == 1);  // -1 - 6/(1-4)
  CHECK(bm.rational() == -2); // -1 - 6/(1+5)
}

TEST_CASE("AT4 labels") {
  auto label = [](const char* text) {
    auto g = IntersectionArray::parse(text);
    auto s = spectrum(g);
    return at4_label(g, s, local_srg(g, s));
  };
  CHECK(label("10,6,4,1;1,2,6,10") == std::array<long, 3>{1, 2, 3});
  CHECK(label("16,9,4,1;1,4,9,16") == std::array<long, 3>{2, 2, 2});
  CHECK(label("176,135,36,1;1,12,135,176") == std::array<long, 3>{8, 4, 4});
  // Patterson is tight with d = 4 but not antipodal
  CHECK(!label("280,243,144,10;1,8,90,280").has_value());
}

TEST_CASE("tightness report composition") {
  auto cs = arr("10,6,4,1;1,2,6,10");
  auto rep = tightness_report(cs, spectrum(cs));
  CHECK(rep.classification == Classification::Tight);
  REQUIRE(rep.epsilon.has_value());
  CHECK(rep.epsilon->epsilon.rational() == rat(4, 3));
  REQUIRE(rep.f.has_value());
  CHECK(rep.f->first.eq(rep.f->second)); // tight => equal bounds
  REQUIRE(rep.local.has_value());
  REQUIRE(rep.at4.has_value());

  auto cube = arr("4,3,2,1;1,2,3,4");
  auto repc = tightness_report(cube, spectrum(cube));
  CHECK(repc.classification == Classification::Bipartite);
  CHECK(!repc.f.has_value());
  CHECK(!repc.local.has_value());
}

// ---- theorem-level properties over the catalog and controls ----

TEST_CASE("equality chain: slack, f bounds, and the two-route identity") {
  auto check_chain = [](const IntersectionArray& g, bool expect_tight) {
    auto s = spectrum(g);
    auto cls = classify(g, s);
    bool tight = cls.classification == Classification::Tight;
    CHECK(tight == expect_tight);
    if (g.a(1) == 0) return;
    auto [lo, hi] = f_bounds(g, s);
    CHECK(lo.eq(hi) == tight);
    // (sigma_2 rho_2 - sigma rho)(rho - sigma) = (sigma rho_2 - sigma_2 rho)(sigma rho - 1)
    if (s.theta1().value.exact() && s.thetad().value.exact()) {
      auto sig = cosine_rational(g, s.theta1().value.rational());
      auto rho = cosine_rational(g, s.thetad().value.rational());
      bool identity = (sig[2] * rho[2] - sig[1] * rho[1]) * (rho[1] - sig[1]) ==
                      (sig[1] * rho[2] - sig[2] * rho[1]) * (sig[1] * rho[1] - 1);
      CHECK(identity == tight);
    }
  };
  for (const auto& e : catalog()) check_chain(e.array, true);
  check_chain(arr("6,4,2;1,2,3"), false);
  check_chain(arr("7,6,5;1,2,3"), false); // folded 7-cube
  check_chain(arr("4,3,3;1,1,2"), false); // odd graph O_4
}

TEST_CASE("the extremal pair is the unique solution of the tight equation") {
  // scan all eigenvalue pairs of a tight array for the product identity
  for (const char* text : {"16,9,4,1;1,4,9,16", "10,6,4,1;1,2,6,10"}) {
    auto g = IntersectionArray::parse(text);
    auto s = spectrum(g);
    Rational A = Rational(g.k()) / (g.a(1) + 1);
    Rational rhs = Rational(-g.k()) * g.a(1) * g.b(1) / (Rational(g.a(1) + 1) * (g.a(1) + 1));
    int found = 0;
    for (int i = 1; i <= g.d(); ++i)
      for (int j = i; j <= g.d(); ++j) {
        Rational a = s.theta(i).value.rational(), b = s.theta(j).value.rational();
        if ((a + A) * (b + A) == rhs) {
          ++found;
          CHECK(i == 1);
          CHECK(j == g.d());
        }
      }
    CHECK(found == 1);
  }
}

TEST_CASE("tight eigenvalue inequalities") {
  for (const auto& e : catalog()) {
    const auto& g = e.array;
    auto s = spectrum(g);
    // theta_d < -k/(a_1+1)
    Scalar bound(Rational(-g.k()) / (g.a(1) + 1));
    CHECK(s.thetad().value.definitely_less(bound));
    // rho^2 < rho_2 for theta_d, sigma^2 > sigma_2 for theta_1
    auto rho = cosine_sequence(g, s.thetad());
    auto sig = cosine_sequence(g, s.theta1());
    CHECK((rho.sigma[1] * rho.sigma[1]).definitely_less(rho.sigma[2]));
    CHECK(sig.sigma[2].definitely_less(sig.sigma[1] * sig.sigma[1]));
    // 0 < f < b_1
    auto [lo, hi] = f_bounds(g, s);
    CHECK(Scalar(0).definitely_less(lo));
    CHECK(hi.definitely_less(Scalar(rat(g.b(1)))));
  }
}

TEST_CASE("sign patterns of the extremal cosine sequences") {
  for (const auto& e : catalog()) {
    const auto& g = e.array;
    auto s = spectrum(g);
    int d = g.d();
    auto sig = cosine_sequence(g, s.theta1());
    auto rho = cosine_sequence(g, s.thetad());
    const auto& s1 = sig.sigma[1];
    const auto& r1 = rho.sigma[1];
    for (int i = 1; i <= d - 1; ++i)
      CHECK((s1 * sig.sigma[i]).definitely_less(sig.sigma[i - 1]));
    for (int i = 2; i <= d; ++i)
      CHECK(sig.sigma[i].definitely_less(s1 * sig.sigma[i - 1]));
    for (int i = 1; i <= d - 1; ++i) {
      Scalar v = r1 * rho.sigma[i] - rho.sigma[i - 1];
      CHECK((i % 2 == 0 ? v : -v).sign_tol() > 0); // (-1)^i (sigma sigma_i - sigma_{i-1}) > 0
    }
    for (int i = 2; i <= d; ++i) {
      Scalar v = rho.sigma[i] - r1 * rho.sigma[i - 1];
      CHECK((i % 2 == 0 ? v : -v).sign_tol() > 0);
    }
  }
}

TEST_CASE("auxiliary identity holds on tight entries and fails on controls") {
  for (const auto& e : catalog()) {
    if (e.quad) continue;
    auto sig = rationals(e.sigma);
    auto rho = rationals(e.rho);
    Rational eps = e.epsilon.rational();
    for (size_t i = 1; i < sig.size(); ++i)
      CHECK(sig[i] * rho[i] - sig[i - 1] * rho[i - 1] ==
            eps * (sig[i - 1] * rho[i] - rho[i - 1] * sig[i]));
  }
  // control: H(3,3) extremal pair with the would-be auxiliary parameter
  auto h = arr("6,4,2;1,2,3");
  auto sh = cosine_rational(h, rat(3));
  auto rh = cosine_rational(h, rat(-3));
  Rational eps = (Rational(36) - rat(3) * rat(-3)) / (Rational(6) * (rat(3) - rat(-3)));
  bool all_hold = true;
  for (size_t i = 1; i < sh.size(); ++i)
    all_hold = all_hold && (sh[i] * rh[i] - sh[i - 1] * rh[i - 1] ==
                            eps * (sh[i - 1] * rh[i] - rh[i - 1] * sh[i]));
  CHECK(!all_hold);
}

TEST_CASE("degenerate denominator trichotomy on the theta_d sequence") {
  // on a tight array: sigma_{i-1} = eps sigma_i <=> sigma_{i+1} = eps sigma_i
  // <=> sigma_{i-1} = sigma_{i+1} <=> the complementary cosine vanishes,
  // where sigma is the theta_d sequence and eps its auxiliary parameter
  for (const auto& e : catalog()) {
    if (e.quad) continue;
    const auto& g = e.array;
    auto s = spectrum(g);
    auto rho = cosine_rational(g, s.thetad().value.rational());
    auto sig = cosine_rational(g, s.theta1().value.rational());
    Rational eps_d = -e.epsilon.rational();
    for (int i = 1; i <= g.d() - 1; ++i) {
      bool c1 = rho[i - 1] == eps_d * rho[i];
      bool c2 = rho[i + 1] == eps_d * rho[i];
      bool c3 = rho[i - 1] == rho[i + 1];
      bool c4 = sig[i] == 0;
      CHECK(c1 == c3);
      CHECK(c2 == c3);
      CHECK(c4 == c3);
    }
  }
}
