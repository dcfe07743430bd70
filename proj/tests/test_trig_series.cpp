#include <doctest.h>

#include <boost/math/quadrature/trapezoidal.hpp>

#include "generators.hpp"
#include "lvlp/expression.hpp"
#include "lvlp/kernels.hpp"
#include "lvlp/linear_solver.hpp"

using namespace lvlp;
using namespace lvlp::testing;
using Poly = SqrtAlphaPoly;
using TP = TrigPoly<Poly>;
using Phase = PhiCoefficient<SqrtAlphaPoly>;

namespace {
Poly q(long n, long d = 1) { return Poly(make_rational(n, d)); }
}  // namespace

TEST_CASE("trigonometric products and derivatives") {
  TP s1 = TP::sin_term(1, q(1)), c1 = TP::cos_term(1, q(1));
  TP expect = TP(q(1, 2)) - TP::cos_term(2, q(1, 2));
  CHECK(s1 * s1 == expect);
  CHECK(c1 * s1 == TP::sin_term(2, q(1, 2)));
  // xi_0 eta_0 = cos(th) sqrt(alpha) sin(th) = (sqrt(alpha)/2) sin(2 th)
  CHECK(c1 * TP::sin_term(1, Poly::sqrt_alpha()) == TP::sin_term(2, Poly::sqrt_alpha() * Rational(1, 2)));
  CHECK((s1 * s1).max_harmonic() == 2);

  CHECK(TP::sin_term(2, q(1)).derivative() == TP::cos_term(2, q(2)));
  CHECK(TP(q(1)).derivative().is_zero());
  CHECK(TP::cos_term(2, q(1, 3)).derivative() == TP::sin_term(2, q(-2, 3)));
}

TEST_CASE("harmonic extraction") {
  TP p = TP::sin_term(1, q(3)) + TP::cos_term(2, q(1));
  CHECK(p.harmonic(1) == std::pair{q(3), Poly()});
  CHECK(TP::cos_term(2, q(1)).harmonic(2) == std::pair{Poly(), q(1)});
}

TEST_CASE("harmonics agree with numerically integrated projections") {
  // alpha = 1, phi = 0; projections (1/pi) int_0^{2pi} p(t) sin(j t) dt.
  PrecisionGuard guard(50);
  Rng rng(21);
  const EvalPoint at = make_eval_point(Real(1), Real(0));
  for (int i = 0; i < 30; ++i) {
    auto a = small_trig<Poly>(rng, [](Rng& r) { return small_poly(r, 2); }, 3);
    auto b = small_trig<Poly>(rng, [](Rng& r) { return small_poly(r, 2); }, 3);
    TP prod = a * b;
    for (int j = 0; j <= 6; ++j) {
      auto f_sin = [&](double t) {
        return static_cast<double>(evaluate_at(a, Real(t), at) * evaluate_at(b, Real(t), at)) * std::sin(j * t);
      };
      auto f_cos = [&](double t) {
        return static_cast<double>(evaluate_at(a, Real(t), at) * evaluate_at(b, Real(t), at)) * std::cos(j * t);
      };
      double ps = boost::math::quadrature::trapezoidal(f_sin, 0.0, 2 * M_PI, 1e-14) / M_PI;
      double pc = boost::math::quadrature::trapezoidal(f_cos, 0.0, 2 * M_PI, 1e-14) / M_PI;
      if (j == 0) pc /= 2;
      auto [s, c] = prod.harmonic(j);
      CHECK(std::abs(ps - static_cast<double>(evaluate(s, at))) <= 1e-12);
      CHECK(std::abs(pc - static_cast<double>(evaluate(c, at))) <= 1e-12);
    }
  }
}

TEST_CASE("particular solutions satisfy the linear equation exactly") {
  Rng rng(22);
  auto make = [](Rng& r) { return small_poly(r, 3); };
  for (int i = 0; i < 100; ++i) {
    // The eta forcing carries a factor s, as it does in the recursion.
    VectorTrigPoly<Poly> forcing{small_trig<Poly>(rng, make), small_trig<Poly>(rng, make).mul_sqrt_alpha()};
    // Remove any resonant first harmonic so the forcing is admissible.
    auto [fs, fc] = forcing.xi.harmonic(1);
    auto [gs, gc] = forcing.eta.harmonic(1);
    forcing.eta.add_cos(1, fs.mul_sqrt_alpha() - gc);
    forcing.eta.add_sin(1, -fc.mul_sqrt_alpha() - gs);
    REQUIRE_FALSE(is_resonant(forcing));
    auto w = particular_solution(forcing);
    // W' - K W - R with K W = (-eta / s, s xi), written out by hand.
    TP r1 = w.xi.derivative() + w.eta.div_sqrt_alpha() - forcing.xi;
    TP r2 = w.eta.derivative() - w.xi.mul_sqrt_alpha() - forcing.eta;
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
  }
}

TEST_CASE("forcing (sin 2th, 0) at alpha = 1") {
  auto one = SqrtAlphaNumber::one(1);
  VectorTrigPoly<SqrtAlphaNumber> f;
  f.xi.add_sin(2, one);
  auto w = particular_solution(f);
  CHECK(linear_residual(w, f).is_zero());
  // Undetermined coefficients: xi = -(2/3) cos 2th, eta = -(s/3) sin 2th. The
  // surd stays formal even though s = 1 here.
  CHECK(w.xi == TrigPoly<SqrtAlphaNumber>::cos_term(2, one * Rational(-2, 3)));
  CHECK(w.eta == TrigPoly<SqrtAlphaNumber>::sin_term(2, one.mul_sqrt_alpha() * Rational(-1, 3)));
}

TEST_CASE("resonant forcing is rejected") {
  VectorTrigPoly<Poly> f;
  f.xi.add_sin(1, q(1));
  CHECK_THROWS_AS(particular_solution(f), EngineError);
}

TEST_CASE("homogeneous solution reproduces its initial values") {
  Rng rng(23);
  const Phase one(Poly(1));
  for (int i = 0; i < 50; ++i) {
    Phase a = small_phase(rng, 2), b = small_phase(rng, 2).mul_sqrt_alpha();
    VectorTrigPoly<Phase> zero;
    auto w = solve_linear(zero, a, b, one);
    CHECK(evaluate_at_phase(w.xi, one) == a);
    CHECK(evaluate_at_phase(w.eta, one) == b);
    CHECK(linear_residual(w, zero).is_zero());
  }
  // (a, b) = (1, 0) at phi = 0 gives (cos tau, sqrt(alpha) sin tau).
  PrecisionGuard guard(50);
  auto w = solve_linear(VectorTrigPoly<Phase>{}, one, Phase(), one);
  const EvalPoint at = make_eval_point(Real(2), Real(0));
  for (double t : {0.0, 0.4, 1.3}) {
    CHECK(static_cast<double>(evaluate_at(w.xi, Real(t), at)) == doctest::Approx(std::cos(t)).epsilon(1e-14));
    CHECK(static_cast<double>(evaluate_at(w.eta, Real(t), at)) ==
          doctest::Approx(std::sqrt(2.0) * std::sin(t)).epsilon(1e-14));
  }
}

TEST_CASE("parallel and serial convolution kernels agree exactly") {
  Rng rng(24);
  auto make = [](Rng& r) { return small_poly(r, 3); };
  std::vector<TP> a, b;
  for (int i = 0; i < 17; ++i) {
    a.push_back(small_trig<Poly>(rng, make, 6));
    b.push_back(small_trig<Poly>(rng, make, 6));
  }
  for (std::size_t n : {0u, 1u, 5u, 16u}) {
    auto fa = [&](std::size_t j) -> const TP& { return a[j]; };
    auto fb = [&](std::size_t j) -> const TP& { return b[j]; };
    CHECK(kernels::cauchy_product_serial<Poly>(n, fa, fb) == kernels::cauchy_product_parallel<Poly>(n, fa, fb));
  }
}
