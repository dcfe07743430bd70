#include <doctest.h>

#include "generators.hpp"
#include "lvlp/expression.hpp"
#include "lvlp/rational.hpp"
#include "lvlp/sqrt_alpha_number.hpp"

using namespace lvlp;
using namespace lvlp::testing;
using Phase = PhiCoefficient<SqrtAlphaPoly>;

TEST_CASE("rational arithmetic stays canonical") {
  Rational x = Rational(1, 2) + Rational(1, 3);
  CHECK(x == Rational(5, 6));
  CHECK(to_string(x) == "5/6");
  Rational y = make_rational(26, -10);
  CHECK(y.get_den() == 5);
  CHECK(y.get_num() == -13);
}

TEST_CASE("parse_rational reads fractions and exact decimals") {
  CHECK(parse_rational("-3/12") == Rational(-1, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("08") == 8);
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("2E2") == 200);
  CHECK_THROWS_AS(parse_rational("1/0"), AlgebraError);
  CHECK_THROWS_AS(parse_rational("abc"), AlgebraError);
}

TEST_CASE("sqrt(alpha) polynomials") {
  const auto s = SqrtAlphaPoly::sqrt_alpha();
  CHECK((s + (-s)).coefficients().empty());
  CHECK(s * s == SqrtAlphaPoly::alpha());
  CHECK(to_string(s * s) == "alpha");
  CHECK((SqrtAlphaPoly::alpha() + SqrtAlphaPoly(7)).evaluate_even_at(1) == 8);
  CHECK_THROWS_AS(SqrtAlphaPoly(1).div_sqrt_alpha(), AlgebraError);
}

TEST_CASE("phase products reduce by product-to-sum") {
  const SqrtAlphaPoly one(1);
  Phase sin1 = Phase::sin_term(1, one), cos1 = Phase::cos_term(1, one);
  CHECK(sin1 + sin1 == Phase::sin_term(1, SqrtAlphaPoly(2)));
  CHECK(sin1 * cos1 == Phase::sin_term(2, SqrtAlphaPoly(Rational(1, 2))));

  // (1/4) sin(phi) (1/3) cos(3 phi) = (1/24)(sin 4phi - sin 2phi), expanded by hand.
  Phase lhs = Phase::sin_term(1, SqrtAlphaPoly(Rational(1, 4))) * Phase::cos_term(3, SqrtAlphaPoly(Rational(1, 3)));
  Phase rhs = Phase::sin_term(4, SqrtAlphaPoly(Rational(1, 24))) - Phase::sin_term(2, SqrtAlphaPoly(Rational(1, 24)));
  CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random samples") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = small_poly(rng), y = small_poly(rng), z = small_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
  for (int i = 0; i < 100; ++i) {
    auto x = small_phase(rng), y = small_phase(rng), z = small_phase(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("numeric evaluation") {
  PrecisionGuard guard(50);
  CHECK(evaluate_numeric(SqrtAlphaPoly::alpha() + SqrtAlphaPoly(7), Real(1), Real(0)) == 8);
  auto w4 = parse_sqrt_alpha_poly("(sqrt(alpha)*(5*alpha^2+34*alpha+29))/6912");
  Real v = evaluate_numeric(w4, Real(1), Real(0));
  CHECK(abs(Complex(v - to_real(Rational(68, 6912)))) < Real(1e-45));
  Real third = pi_real() / 6;
  Real s3 = evaluate_numeric(Phase::sin_term(3, SqrtAlphaPoly(1)), Real(1), third);
  CHECK(abs(Complex(s3 - 1)) < Real(1e-45));
  CHECK_THROWS_AS(evaluate_numeric(SqrtAlphaPoly(1), Real(0), Real(0)), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
  PrecisionGuard guard(50);
  Rng rng(12);
  std::uniform_real_distribution<double> alpha(0.1, 4.0), phi(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    auto x = small_phase(rng), y = small_phase(rng);
    EvalPoint at = make_eval_point(Real(alpha(rng)), Real(phi(rng)));
    Real lhs = evaluate(x * y, at), rhs = evaluate(x, at) * evaluate(y, at);
    CHECK(boost::multiprecision::abs(lhs - rhs) <= Real(1e-30));
    CHECK(boost::multiprecision::abs(evaluate(x + y, at) - evaluate(x, at) - evaluate(y, at)) <= Real(1e-30));
  }
}

TEST_CASE("reduction at rational alpha is a homomorphism") {
  Rng rng(13);
  auto ctx = std::make_shared<const Rational>(Rational(3, 5));
  for (int i = 0; i < 100; ++i) {
    auto x = small_poly(rng), y = small_poly(rng);
    auto rx = SqrtAlphaNumber::reduce(x, ctx), ry = SqrtAlphaNumber::reduce(y, ctx);
    CHECK(SqrtAlphaNumber::reduce(x * y, ctx) == rx * ry);
    CHECK(SqrtAlphaNumber::reduce(x + y, ctx) == rx + ry);
  }
  CHECK_THROWS(SqrtAlphaNumber::one(1) + SqrtAlphaNumber::one(2));
}

TEST_CASE("printed form round-trips through the parser") {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    auto x = small_poly(rng);
    CHECK(parse_sqrt_alpha_poly(to_string(x)) == x);
    auto p = small_phase(rng);
    CHECK(parse_phi_coefficient(to_string(p)) == p);
    // Printing the parsed value again is stable.
    CHECK(to_string(parse_phi_coefficient(to_string(p))) == to_string(p));
  }
  CHECK(to_string(parse_sqrt_alpha_poly("-sqrt(alpha)*(5*alpha^2+34*alpha+29)/6912")) ==
        "-(sqrt(alpha)*(5*alpha^2+34*alpha+29))/6912");
  CHECK_THROWS_AS(parse_sqrt_alpha_poly("sin(phi)"), AlgebraError);
  CHECK_THROWS_AS(parse_sqrt_alpha_poly("1/alpha"), AlgebraError);
  CHECK_THROWS_AS(parse_sqrt_alpha_poly("(1+"), AlgebraError);
}
