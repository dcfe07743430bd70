#include <doctest.h>

#include <cmath>
#include <random>

#include "lvlp/engine.hpp"
#include "lvlp/expression.hpp"
#include "lvlp/model.hpp"
#include "lvlp/residual.hpp"
#include "lvlp/series_io.hpp"

using namespace lvlp;
using Poly = SqrtAlphaPoly;
using Phase = PhiCoefficient<SqrtAlphaPoly>;

namespace {

template <class C>
PerturbationSeries<C> run(const C& one, GaugeMode gauge, std::size_t order) {
  EngineOptions o;
  o.gauge = gauge;
  return LindstedtEngine<C>(one, o).run(order);
}

const PerturbationSeries<Poly>& simplified_xi() {
  static const auto s = run(Poly(1), GaugeMode::kSimplifiedXi, 8);
  return s;
}

const PerturbationSeries<Phase>& zero_initial() {
  static const auto s = run(Phase(Poly(1)), GaugeMode::kZeroInitial, 3);
  return s;
}

Poly P(const char* text) { return parse_sqrt_alpha_poly(text); }
Phase F(const char* text) { return parse_phi_coefficient(text); }

}  // namespace

TEST_CASE("zeroth order is the linear oscillation") {
  const auto& o = simplified_xi().orders[0];
  CHECK(o.xi == TrigPoly<Poly>::cos_term(1, Poly(1)));
  CHECK(o.eta == TrigPoly<Poly>::sin_term(1, Poly::sqrt_alpha()));
  CHECK(o.omega == Poly::sqrt_alpha());
}

TEST_CASE("first-order forcing") {
  LindstedtEngine<Poly> eng(Poly(1));
  PerturbationSeries<Poly> prior;
  prior.orders.push_back(eng.zeroth_order());
  auto f = eng.build_forcing(1, prior);
  // xi_0 eta_0 = (s/2) sin 2th; F = -xi_0 eta_0 / s, G = s xi_0 eta_0.
  CHECK(f.known.xi == TrigPoly<Poly>::sin_term(2, Poly(Rational(-1, 2))));
  CHECK(f.known.eta == TrigPoly<Poly>::sin_term(2, Poly::alpha() * Rational(1, 2)));
  CHECK(f.omega_direction.xi == TrigPoly<Poly>::sin_term(1, Poly(1)));
  CHECK(f.omega_direction.eta == TrigPoly<Poly>::cos_term(1, -Poly::sqrt_alpha()));
  CHECK(eng.remove_secular(f).omega.is_zero());
  CHECK_THROWS_AS(eng.build_forcing(3, prior), EngineError);
}

TEST_CASE("frequency corrections") {
  const auto& s = simplified_xi();
  CHECK(s.orders[1].omega.is_zero());
  CHECK(s.orders[3].omega.is_zero());
  CHECK(s.orders[2].omega == P("-sqrt(alpha)*(alpha+1)/24"));
  CHECK(to_string(s.orders[4].omega) == "-(sqrt(alpha)*(5*alpha^2+34*alpha+29))/6912");
  CHECK(to_string(s.orders[6].omega) == "(sqrt(alpha)*(97*alpha^3-645*alpha^2-2925*alpha-2183))/3317760");
  CHECK(to_string(s.orders[8].omega) ==
        "(sqrt(alpha)*(102293*alpha^4+188228*alpha^3-763890*alpha^2-2581852*alpha-1732027))/14332723200");
  CHECK(zero_initial().orders[1].omega.is_zero());
}

TEST_CASE("first- and second-order solutions in the simplified gauge") {
  const auto& s = simplified_xi();
  const auto& x1 = s.orders[1];
  CHECK(x1.xi.sin_coefficient(2) == P("sqrt(alpha)/6"));
  CHECK(x1.xi.cos_coefficient(2) == P("1/3"));
  CHECK(x1.eta.sin_coefficient(2) == P("sqrt(alpha)/6"));
  CHECK(x1.eta.cos_coefficient(2) == P("-alpha/3"));

  // Runs over Q(sqrt(alpha))[phi] expose the gauge constants.
  auto sp = run(Phase(Poly(1)), GaugeMode::kSimplifiedXi, 2);
  CHECK(sp.orders[1].gauge_constants.first == F("sqrt(alpha)/6*sin(2*phi)+1/3*cos(2*phi)"));
  CHECK(sp.orders[1].gauge_constants.second == F("sqrt(alpha)/6*sin(2*phi)-alpha/3*cos(2*phi)"));
  CHECK(sp.orders[2].gauge_constants.first == F("sqrt(alpha)/8*sin(3*phi)+(3-alpha)/32*cos(3*phi)"));
  CHECK(sp.orders[2].gauge_constants.second ==
        F("alpha/12*cos(phi)+sqrt(alpha)*(1-alpha)/24*sin(phi)-alpha/8*cos(3*phi)+sqrt(alpha)*(1-3*alpha)/32*sin(3*phi)"));

  const auto& x2 = s.orders[2];
  TrigPoly<Poly> xi2, eta2;
  xi2.add_sin(3, P("sqrt(alpha)/8"));
  xi2.add_cos(3, P("(3-alpha)/32"));
  eta2.add_sin(1, P("sqrt(alpha)*(1-alpha)/24"));
  eta2.add_sin(3, P("sqrt(alpha)*(1-3*alpha)/32"));
  eta2.add_cos(1, P("alpha/12"));
  eta2.add_cos(3, P("-alpha/8"));
  CHECK(x2.xi == xi2);
  CHECK(x2.eta == eta2);
}

TEST_CASE("third-order Fourier coefficients") {
  const auto& x3 = simplified_xi().orders[3];
  CHECK(x3.xi.sin_coefficient(2) == P("sqrt(alpha)*(alpha-11)/864"));
  CHECK(x3.xi.sin_coefficient(4) == P("sqrt(alpha)*(125-13*alpha)/2160"));
  CHECK(x3.xi.cos_coefficient(2) == P("(alpha+7)/432"));
  CHECK(x3.xi.cos_coefficient(4) == P("(13-20*alpha)/540"));
  CHECK(x3.eta.sin_coefficient(2) == P("sqrt(alpha)*(25*alpha+13)/864"));
  CHECK(x3.eta.sin_coefficient(4) == P("sqrt(alpha)*(13-125*alpha)/2160"));
  CHECK(x3.eta.cos_coefficient(2) == P("alpha*(5*alpha-1)/432"));
  CHECK(x3.eta.cos_coefficient(4) == P("alpha*(13*alpha-20)/540"));
}

TEST_CASE("zero-initial gauge") {
  const auto& s = zero_initial();
  const auto& x1 = s.orders[1];
  TrigPoly<Phase> xi1, eta1;
  xi1.add_sin(1, F("sin(phi)/4-sqrt(alpha)*cos(3*phi)/12-sin(3*phi)/12-sqrt(alpha)*cos(phi)/4"));
  xi1.add_sin(2, F("sqrt(alpha)/6"));
  xi1.add_cos(1, F("sqrt(alpha)*sin(3*phi)/12-cos(phi)/4-cos(3*phi)/12-sqrt(alpha)*sin(phi)/4"));
  xi1.add_cos(2, F("1/3"));
  eta1.add_sin(1, F("alpha*sin(3*phi)/12-sqrt(alpha)*cos(3*phi)/12-sqrt(alpha)*cos(phi)/4-alpha*sin(phi)/4"));
  eta1.add_sin(2, F("sqrt(alpha)/6"));
  eta1.add_cos(1, F("alpha*cos(3*phi)/12+sqrt(alpha)*sin(3*phi)/12+alpha*cos(phi)/4-sqrt(alpha)*sin(phi)/4"));
  eta1.add_cos(2, F("-alpha/3"));
  CHECK(x1.xi == xi1);
  CHECK(x1.eta == eta1);
  CHECK(s.orders[3].omega == F("sqrt(alpha)*(alpha+1)*cos(3*phi)/144-alpha*(alpha+1)*sin(3*phi)/144"
                               "+sqrt(alpha)*(alpha+1)*cos(phi)/48+alpha*(alpha+1)*sin(phi)/48"));
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(s.orders[n].gauge_constants.first.is_zero());
    CHECK(s.orders[n].gauge_constants.second.is_zero());
  }
}

TEST_CASE("zero-initial gauge needs a phase ring and an explicit order limit") {
  EngineOptions o;
  o.gauge = GaugeMode::kZeroInitial;
  CHECK_THROWS_AS(LindstedtEngine<Poly>(Poly(1), o).run(2), EngineError);
  o.zero_initial_max_order = 2;
  CHECK_THROWS_AS(LindstedtEngine<Phase>(Phase(Poly(1)), o).run(3), EngineError);
}

TEST_CASE("truncated series satisfy the equations order by order") {
  CHECK(first_nonzero_residual(simplified_xi(), 8) == -1);
  CHECK(first_nonzero_residual(zero_initial(), 3) == -1);
  CHECK(first_nonzero_residual(run(Poly(1), GaugeMode::kSimplifiedEta, 6), 6) == -1);
  // Perturbing one coefficient is detected at that order.
  auto broken = simplified_xi();
  broken.orders[3].xi.add_cos(2, Poly(1));
  CHECK(first_nonzero_residual(broken, 8) == 3);
}

TEST_CASE("the two simplified gauges are related by swapping the species") {
  // Exchanging x and y maps alpha to 1/alpha and the xi gauge to the eta gauge,
  // so d_k = omega_{2k} / s obeys d_k^eta(alpha) = alpha^k d_k^xi(1/alpha).
  auto eta = run(Poly(1), GaugeMode::kSimplifiedEta, 8);
  const auto& xi = simplified_xi();
  CHECK_FALSE(eta.orders[2].xi == xi.orders[2].xi);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto d_eta = eta.orders[2 * k].omega.div_sqrt_alpha();
    auto d_xi = xi.orders[2 * k].omega.div_sqrt_alpha();
    for (Rational alpha : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
      Rational scale = 1;
      for (std::size_t i = 0; i < k; ++i) scale *= alpha;
      CHECK(d_eta.evaluate_even_at(alpha) == scale * d_xi.evaluate_even_at(1 / alpha));
    }
    CHECK(eta.orders[2 * k - 1].omega.is_zero());
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    auto [c, d] = eta.orders[n].eta.harmonic(1);
    CHECK(c.is_zero());
    CHECK(d.is_zero());
  }
}

TEST_CASE("rational alpha agrees with the symbolic run") {
  const Rational alpha(5, 2);
  auto num = run(SqrtAlphaNumber::one(alpha), GaugeMode::kSimplifiedXi, 6);
  auto ctx = num.one.alpha();
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(SqrtAlphaNumber::reduce(simplified_xi().orders[n].omega, ctx) == num.orders[n].omega);
  }
}

TEST_CASE("serial and parallel engines agree") {
  EngineOptions serial;
  serial.parallel = false;
  auto a = LindstedtEngine<Poly>(Poly(1), serial).run(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(a.orders[n].xi == simplified_xi().orders[n].xi);
    CHECK(a.orders[n].eta == simplified_xi().orders[n].eta);
  }
}

TEST_CASE("series documents round-trip") {
  auto doc = series_to_json(zero_initial());
  auto back = series_from_json(nlohmann::json::parse(doc.dump()), Phase(Poly(1)));
  REQUIRE(back.orders.size() == zero_initial().orders.size());
  for (std::size_t n = 0; n < back.orders.size(); ++n) {
    CHECK(back.orders[n].xi == zero_initial().orders[n].xi);
    CHECK(back.orders[n].eta == zero_initial().orders[n].eta);
    CHECK(back.orders[n].omega == zero_initial().orders[n].omega);
    CHECK(back.orders[n].gauge_constants == zero_initial().orders[n].gauge_constants);
  }
  CHECK(back.gauge == GaugeMode::kZeroInitial);

  auto num = run(SqrtAlphaNumber::one(Rational(3, 4)), GaugeMode::kSimplifiedXi, 4);
  auto back_num = series_from_json(series_to_json(num), SqrtAlphaNumber::one(Rational(3, 4)));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(back_num.orders[n].xi == num.orders[n].xi);

  doc["orders"][1]["n"] = 5;
  CHECK_THROWS_AS(series_from_json(doc, Phase(Poly(1))), AlgebraError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::object(), Phase(Poly(1))), AlgebraError);
}

TEST_CASE("reduction of the four-parameter model") {
  const ModelParams p{2, 3, 5, 7};
  const ReducedModel r = reduce_parameters(p);
  // The scaled right-hand side must equal the reduced one at random points.
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  const double a = 2, b = 3, c = 5, d = 7;
  const double al = r.alpha.get_d(), ts = r.time_scale.get_d(), xs = r.x_scale.get_d(), ys = r.y_scale.get_d();
  for (int i = 0; i < 20; ++i) {
    double X = u(rng), Y = u(rng);
    double x = xs * X, y = ys * Y;
    // dx/dt = xs X' / ts.
    CHECK(xs * X * (a - b * Y) / ts == doctest::Approx(x - x * y));
    CHECK(ys * Y * (c * X - d) / ts == doctest::Approx(al * (-y + x * y)));
  }
  CHECK(r.alpha == Rational(7, 2));
  CHECK_THROWS_AS(reduce_parameters({1, 0, 1, 1}), std::invalid_argument);
}

TEST_CASE("amplitude and phase from initial conditions") {
  const double alpha = 2.0, a = 0.1, phi = M_PI / 4;
  auto ap = invert_initial_conditions(1 + a * std::cos(phi), 1 + a * std::sqrt(alpha) * std::sin(phi), alpha);
  CHECK(ap.a == doctest::Approx(a).epsilon(1e-14));
  CHECK(ap.phi == doctest::Approx(phi).epsilon(1e-14));
  CHECK_THROWS_AS(invert_initial_conditions(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(invert_initial_conditions(1.1, 1, 0), std::invalid_argument);
}

TEST_CASE("gauge names") {
  CHECK(parse_gauge("zero-initial") == GaugeMode::kZeroInitial);
  CHECK(to_string(GaugeMode::kSimplifiedEta) == "simplified-eta");
  CHECK_THROWS_AS(parse_gauge("xi"), std::invalid_argument);
}
