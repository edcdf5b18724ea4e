#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drgt/cosine.hpp"
#include "drgt/error.hpp"
#include "drgt/intersection_array.hpp"
#include "drgt/spectrum.hpp"

#include <vector>

using namespace drgt;

namespace {
const char* kJohnson84 = "16,9,4,1;1,4,9,16";
const char* kConwaySmith = "10,6,4,1;1,2,6,10";
const char* kHypercube4 = "4,3,2,1;1,2,3,4";
const char* kIcosahedron = "5,2,1;1,2,5";

std::vector<long> longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(static_cast<long>(x.get_si()));
  return out;
}
} // namespace

TEST_CASE("array parsing and validation") {
  auto g = IntersectionArray::parse(kJohnson84);
  CHECK(g.d() == 4);
  CHECK(g.k() == 16);
  CHECK(g.str() == kJohnson84);
  CHECK(IntersectionArray::parse(" 16, 9, 4, 1 ; 1, 4, 9, 16 ").str() == kJohnson84);

  CHECK_THROWS_AS(IntersectionArray({4, 3}, {2, 4}), Error);       // c_1 != 1
  CHECK_THROWS_AS(IntersectionArray({4, 0}, {1, 4}), Error);       // nonpositive b
  CHECK_THROWS_AS(IntersectionArray({5, 4}, {1, 3}), Error);       // k_2 = 20/3
  CHECK_THROWS_AS(IntersectionArray({6, 1}, {1, 7}), Error);       // a_2 < 0
  CHECK_THROWS_AS(IntersectionArray::parse("4,3,2,1;1,2,3"), Error);
  // a_1 != 0 with a middle a_i = 0 is not realizable
  CHECK_THROWS_AS(IntersectionArray({6, 4, 5}, {1, 2, 3}), Error);
}

TEST_CASE("derived counts") {
  auto g = IntersectionArray::parse(kJohnson84);
  auto dc = derive_counts(g);
  CHECK(dc.a == std::vector<long>{0, 6, 8, 6, 0});
  CHECK(longs(dc.k_i) == std::vector<long>{1, 16, 36, 16, 1});
  CHECK(dc.n == 70);
  // p^1 product formulas
  CHECK(dc.p1_ii[1] == 6);        // a_1
  CHECK(dc.p1_prev[1] == 1);
  CHECK(dc.p1_prev[2] == 9);      // b_1
  CHECK(dc.p1_ii[4] == 0);        // a_d = 0 annihilates the product

  auto cs = IntersectionArray::parse(kConwaySmith);
  auto dcc = derive_counts(cs);
  CHECK(longs(dcc.k_i) == std::vector<long>{1, 10, 30, 20, 2});
  CHECK(dcc.n == 63);
}

TEST_CASE("spectrum of the Johnson array") {
  auto g = IntersectionArray::parse(kJohnson84);
  auto s = spectrum(g);
  REQUIRE(s.d() == 4);
  std::vector<long> want_theta{16, 8, 2, -2, -4};
  std::vector<long> want_mult{1, 7, 20, 28, 14};
  for (int i = 0; i <= 4; ++i) {
    CHECK(s.theta(i).value.rational() == want_theta[i]);
    CHECK(s.theta(i).multiplicity == want_mult[i]);
  }
  // characteristic polynomial really vanishes on the eigenvalues
  Poly p = characteristic_polynomial(g);
  for (long t : want_theta) CHECK(p.eval(rat(t)) == 0);
}

TEST_CASE("spectrum of the hypercube") {
  auto g = IntersectionArray::parse(kHypercube4);
  auto s = spectrum(g);
  std::vector<long> want{4, 2, 0, -2, -4};
  for (int i = 0; i <= 4; ++i) CHECK(s.theta(i).value.rational() == want[i]);
  std::vector<long> mult{1, 4, 6, 4, 1};
  for (int i = 0; i <= 4; ++i) CHECK(s.theta(i).multiplicity == mult[i]);
}

TEST_CASE("spectrum of the icosahedron is exact in a quadratic field") {
  auto g = IntersectionArray::parse(kIcosahedron);
  auto s = spectrum(g);
  REQUIRE(s.d() == 3);
  CHECK(s.theta(0).value.rational() == 5);
  CHECK(s.theta(2).value.rational() == -1);
  CHECK(s.theta1().value.value() == doctest::Approx(2.2360679775).epsilon(1e-11));
  CHECK(s.thetad().value.value() == doctest::Approx(-2.2360679775).epsilon(1e-11));
  CHECK(s.theta1().multiplicity == 3);
  CHECK(s.theta(2).multiplicity == 5);
  CHECK(s.thetad().multiplicity == 3);
  auto f = s.extremal_pair_field();
  REQUIRE(f.has_value());
  CHECK(f->S == 0);
  CHECK(f->P == 5);
}

TEST_CASE("multiplicity integrality rejects bogus arrays") {
  // integer spectrum 20, 5, -1, -12 but m(5) = 2016/153
  CHECK_THROWS_AS(spectrum(IntersectionArray({20, 16, 5}, {1, 10, 16})), Error);
}

TEST_CASE("cosine sequences") {
  auto g = IntersectionArray::parse(kJohnson84);
  auto seq = cosine_sequence(g, Scalar(rat(8)));
  std::vector<Rational> want{rat(1), rat(1, 2), rat(0), rat(-1, 2), rat(-1)};
  for (int i = 0; i <= 4; ++i) CHECK(seq.sigma[i].rational() == want[i]);
  CHECK(terminal_residual(g, seq).is_zero());

  auto seq2 = cosine_sequence(g, Scalar(rat(-4)));
  std::vector<Rational> want2{rat(1), rat(-1, 4), rat(1, 6), rat(-1, 4), rat(1)};
  for (int i = 0; i <= 4; ++i) CHECK(seq2.sigma[i].rational() == want2[i]);
  CHECK(terminal_residual(g, seq2).is_zero());

  // theta = k gives the all-ones sequence
  auto ones = cosine_sequence(g, Scalar(rat(16)));
  for (int i = 0; i <= 4; ++i) CHECK(ones.sigma[i].rational() == 1);

  // a non-eigenvalue leaves a terminal residual
  auto bad = cosine_sequence(g, Scalar(rat(7)));
  CHECK(!terminal_residual(g, bad).is_zero());
}

TEST_CASE("bipartite equivalences") {
  auto cube = IntersectionArray::parse(kHypercube4);
  auto scube = spectrum(cube);
  auto r = bipartite_test(cube, scube);
  CHECK(r.is_bipartite);
  CHECK(r.thetad_is_minus_k);
  CHECK(r.sigma1_is_minus_one);
  CHECK(r.sigma2_is_one);

  auto j = IntersectionArray::parse(kJohnson84);
  CHECK(!bipartite_test(j, spectrum(j)).is_bipartite);
  auto ico = IntersectionArray::parse(kIcosahedron);
  CHECK(!bipartite_test(ico, spectrum(ico)).is_bipartite);
}

TEST_CASE("d = 2 strongly-regular arrays are accepted") {
  // Petersen: (10,3,0,1) -> {3,2;1,1}, spectrum 3, 1, -2
  IntersectionArray petersen({3, 2}, {1, 1});
  auto s = spectrum(petersen);
  CHECK(s.theta(0).value.rational() == 3);
  CHECK(s.theta(1).value.rational() == 1);
  CHECK(s.theta(2).value.rational() == -2);
  CHECK(s.theta(1).multiplicity == 5);
  CHECK(s.theta(2).multiplicity == 4);
}

TEST_CASE("lemma 2.3 identities hold for every eigenvalue") {
  for (const char* text : {kJohnson84, kConwaySmith, kHypercube4, "6,4,2;1,2,3"}) {
    auto g = IntersectionArray::parse(text);
    auto s = spectrum(g);
    Rational k = rat(g.k()), b1 = rat(g.b(1)), a1 = rat(g.a(1));
    Rational cd = rat(g.c(g.d())), ad = rat(g.a(g.d()));
    for (const auto& e : s.eigenvalues()) {
      Rational t = e.value.rational();
      auto sig = cosine_rational(g, t);
      int d = g.d();
      CHECK(k * b1 * sig[2] == t * t - a1 * t - k);
      CHECK(k * b1 * (sig[1] - sig[2]) == (k - t) * (1 + t));
      CHECK(k * b1 * (1 - sig[2]) == (k - t) * (t + k - a1));
      CHECK(k * k * b1 * (sig[1] * sig[1] - sig[2]) == (k - t) * (k + t * (a1 + 1)));
      CHECK(cd * (sig[d - 1] - sig[d]) == k * (sig[1] - 1) * sig[d]);
      CHECK(ad * (sig[d - 1] - sig[d]) == k * (sig[d - 1] - sig[1] * sig[d]));
    }
  }
}
