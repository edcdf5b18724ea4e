#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drgt/error.hpp"
#include "drgt/polynomial.hpp"
#include "drgt/quadratic.hpp"
#include "drgt/rational.hpp"
#include "drgt/scalar.hpp"

using namespace drgt;

TEST_CASE("rational parsing") {
  CHECK(*parse_rational("3/2") == rat(3, 2));
  CHECK(*parse_rational("-10/4") == rat(-5, 2));
  CHECK(*parse_rational("7") == rat(7));
  CHECK(*parse_rational(" 1 / 3 ") == rat(1, 3));
  CHECK(*parse_rational("0.5") == rat(1, 2));
  CHECK(*parse_rational("-1.25") == rat(-5, 4));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("abc").has_value());
  CHECK(!parse_rational("1.2.3").has_value());
  CHECK(to_string(rat(-5, 2)) == "-5/2");
  CHECK(to_string(rat(4, 2)) == "2");
}

TEST_CASE("quadratic field arithmetic and ordering") {
  // theta = sqrt(5): theta^2 = 0*theta + 5
  QuadraticField f{0, 5};
  CHECK(f.is_real_irrational());
  QuadExt th = QuadExt::generator(f);
  CHECK((th * th) == QuadExt::constant(f, 5));
  CHECK((th * th - rat(5)).is_zero());
  QuadExt co = QuadExt::cogenerator(f); // -sqrt(5)
  CHECK((th + co).is_zero());
  CHECK((th * co) == QuadExt::constant(f, -5));
  CHECK(th.sign() == 1);
  CHECK(co.sign() == -1);
  CHECK(th > co);
  // (1 + theta)/(1 - theta) * (1 - theta) == 1 + theta
  QuadExt one = QuadExt::constant(f, 1);
  QuadExt q = (one + th) / (one - th);
  CHECK((q * (one - th)) == (one + th));
  CHECK(th.to_double() == doctest::Approx(2.2360679775).epsilon(1e-9));

  // golden ratio field: theta^2 = theta + 1, theta = (1+sqrt5)/2
  QuadraticField g{1, 1};
  QuadExt phi = QuadExt::generator(g);
  CHECK((phi * phi) == (phi + rat(1)));
  CHECK((phi - rat(8, 5)).sign() == 1);  // phi > 1.6
  CHECK((phi - rat(17, 10)).sign() == -1); // phi < 1.7
  // rational square discriminant is not irrational
  CHECK(!QuadraticField{0, 4}.is_real_irrational());
  CHECK(!QuadraticField{3, -2}.is_real_irrational()); // x^2-3x+2 = (x-1)(x-2)
}

TEST_CASE("scalar arithmetic and tolerance policy") {
  Scalar a(rat(1, 3)), b(rat(1, 6));
  CHECK((a + b).rational() == rat(1, 2));
  CHECK((a * b).rational() == rat(1, 18));
  CHECK((a - a).is_zero());
  Scalar x = Scalar::approx(1.0, 1e-12);
  Scalar y = Scalar::approx(1.0 + 5e-13, 1e-12);
  CHECK(x.eq(y));
  CHECK(!x.eq(Scalar::approx(1.1, 1e-12)));
  CHECK(Scalar(1).definitely_less(Scalar(2)));
  CHECK(!Scalar::approx(1.0, 1e-3).definitely_less(Scalar::approx(1.0005, 1e-3)));
  CHECK((x - Scalar(1)).sign_tol() == 0);
  CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("polynomial division and deflation") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  Poly p({rat(-6), rat(11), rat(-6), rat(1)});
  CHECK(p.eval(rat(2)) == 0);
  CHECK(p.eval(rat(4)) == rat(6));
  Poly q = p.deflate(rat(1));
  CHECK(q.degree() == 2);
  CHECK(q.eval(rat(2)) == 0);
  CHECK(q.eval(rat(3)) == 0);
  auto [quo, rem] = p.divmod(Poly({rat(-2), rat(1)}));
  CHECK(rem.is_zero());
  CHECK(quo.degree() == 2);
}

TEST_CASE("sturm isolation finds all roots") {
  // roots 1, 2, 3
  Poly p({rat(-6), rat(11), rat(-6), rat(1)});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    auto r = refine_root(p, roots[i], rat(1, 1000));
    Rational target = rat(static_cast<long>(i) + 1);
    if (r.is_exact())
      CHECK(r.lo == target);
    else {
      CHECK(r.lo < target);
      CHECK(target <= r.hi);
    }
  }

  // x^2 - 5: irrational pair
  Poly q({rat(-5), rat(0), rat(1)});
  auto qr = isolate_real_roots(q);
  REQUIRE(qr.size() == 2);
  auto neg = refine_root(q, qr[0], rat(1, 1 << 20));
  auto pos = refine_root(q, qr[1], rat(1, 1 << 20));
  CHECK(to_double(pos.lo) == doctest::Approx(2.2360679775).epsilon(1e-5));
  CHECK(to_double(neg.hi) == doctest::Approx(-2.2360679775).epsilon(1e-5));

  // rational root exactly at a split midpoint: roots -1, 0, 1
  Poly c({rat(0), rat(-1), rat(0), rat(1)});
  auto cr = isolate_real_roots(c);
  REQUIRE(cr.size() == 3);

  // root bound covers the spread
  CHECK(root_bound(p) >= 3);
}
