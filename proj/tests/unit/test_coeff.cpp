#include "helpers.hpp"

#include "lieco/poly.hpp"
#include "lieco/sampling.hpp"

using namespace lieco;
using namespace testing;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("gaussian rationals") {
  const GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  CHECK(GaussRational(1) / i == -i);
  CHECK((GaussRational(Rational(1), Rational(2))).str() == "(1 + 2*i)");
  CHECK((GaussRational(Rational(0), Rational(-2, 3))).str() == "-2/3*i");
}

TEST_CASE("arith examples") {
  CHECK((x(1) + x(2)) * (x(1) - x(2)) == x(1) * x(1) - x(2) * x(2));
  CHECK((P("x1*x2 + 3") * Poly(1)).is_zero());
  CHECK(c(1, 2, 1) * x(0) + c(1, 2, 1) * x(0) == x(0));
  CHECK_THROWS_AS(x(1, 1) + x(1, 2), std::invalid_argument);
}

TEST_CASE("partial examples") {
  CHECK(P("x1**2*x2").partial(1) == P("2*x1*x2"));
  CHECK(x(0).partial(2).is_zero());
  CHECK((x(0) * x(1)).partial(0) == x(1));
  CHECK_THROWS_AS(x(0).partial(3), std::out_of_range);
  CHECK_THROWS_AS(x(0).partial(-1), std::out_of_range);
}

TEST_CASE("is_basic examples") {
  CHECK(P("x1*x2**2").is_basic());
  CHECK_FALSE(P("x0 + x1").is_basic());
  CHECK(Poly(1).is_basic());
}

TEST_CASE("eval examples") {
  const Rational pt1[] = {0, 2, 3};
  CHECK(P("x1*x2").eval(pt1) == GaussRational(6));
  CHECK(c(1).eval(pt1) == GaussRational(1));
  const Rational pt2[] = {Rational(1, 2), 0, 0};
  CHECK(P("x0**2").eval(pt2) == GaussRational(Rational(1, 4)));
  const Rational short_pt[] = {1, 2};
  CHECK_THROWS_AS(x(0).eval(short_pt), std::invalid_argument);
}

TEST_CASE("graded-lex printing") {
  CHECK(P("3 + x0 + x1**2*x2").str() == "x1**2*x2 + x0 + 3");
  CHECK(P("x2 + x1").str() == "x1 + x2");
  CHECK(P("-x1 - 1/2*x0").str() == "-1/2*x0 - x1");
  CHECK(P("i*x1").str() == "i*x1");
  CHECK(Poly(1).str() == "0");
}

TEST_CASE("property: ring axioms, Leibniz, commuting partials, basic subalgebra") {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(1000 + n);
    for (int k = 0; k < 100; ++k) {
      const Poly a = s.poly(n, 3), b = s.poly(n, 3), d = s.poly(n, 3);
      CHECK((a * b) * d == a * (b * d));
      CHECK(a * (b + d) == a * b + a * d);
      CHECK(a * b == b * a);
      for (int i = 0; i <= 2 * n; ++i) {
        CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
        for (int j = 0; j <= 2 * n; ++j) {
          CHECK(a.partial(i).partial(j) == a.partial(j).partial(i));
        }
      }
      const Poly p = s.basic_poly(n, 3), q = s.basic_poly(n, 3);
      CHECK((p + q).is_basic());
      CHECK((p * q).is_basic());
    }
  }
}

TEST_CASE("property: eval is a ring homomorphism") {
  Sampler s(77);
  for (int k = 0; k < 100; ++k) {
    const Poly a = s.poly(1, 3), b = s.poly(1, 3);
    const Vec pt = s.vec(3);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a - b).eval(pt) == a.eval(pt) - b.eval(pt));
  }
}
