#include <doctest.h>

#include <cmath>

#include "lvlp/ode.hpp"

using namespace lvlp;

namespace {

const PerturbationSeries<SqrtAlphaNumber>& series_alpha_1() {
  static const auto s = LindstedtEngine<SqrtAlphaNumber>(SqrtAlphaNumber::one(1)).run(8, "1");
  return s;
}

}  // namespace

TEST_CASE("first integral") {
  CHECK(first_integral(1.0, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(first_integral(2.0, std::exp(1.0), 1.0) == doctest::Approx(2.0 * (std::exp(1.0) - 1.0) + 1.0));
}

TEST_CASE("stationary point stays put") {
  IntegratorConfig c;
  c.max_time = 5;
  auto o = integrate(1.7, 1.0, 1.0, c);
  CHECK(o.x.back() == 1.0);
  CHECK(o.y.back() == 1.0);
  CHECK(o.times.back() == doctest::Approx(5.0));
}

TEST_CASE("small orbits have the linear frequency") {
  IntegratorConfig c;
  c.max_time = 30;
  CHECK(measure_frequency(integrate(1.0, 1.001, 1.0, c)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(measure_frequency(integrate(4.0, 1.001, 1.0, c)) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("first integral is conserved") {
  IntegratorConfig c;
  c.max_time = 40;
  auto o = integrate(1.0, 1.3, 0.8, c);
  CHECK(o.conserved_drift <= 1e-9);
}

TEST_CASE("fourth-order convergence") {
  // Fixed steps (the tolerance never triggers halving); the error ratio for
  // h and h/2 approaches 2^4.
  auto end_state = [](double h) {
    IntegratorConfig c;
    c.step = h;
    c.tolerance = 1e3;
    c.max_time = 2.0;
    auto o = integrate(1.0, 1.5, 1.0, c);
    return std::pair{o.x.back(), o.y.back()};
  };
  auto ref = end_state(1e-4);
  auto e = [&](double h) {
    auto [x, y] = end_state(h);
    return std::hypot(x - ref.first, y - ref.second);
  };
  const double ratio = e(0.1) / e(0.05);
  CHECK(ratio > 13.0);
  CHECK(ratio < 19.0);
}

TEST_CASE("backward integration retraces the orbit") {
  IntegratorConfig c;
  c.max_time = 3.0;
  auto fwd = integrate(1.4, 1.2, 0.9, c);
  c.max_time = -3.0;
  auto back = integrate(1.4, fwd.x.back(), fwd.y.back(), c);
  CHECK(back.times.back() == doctest::Approx(-3.0));
  CHECK(std::abs(back.x.back() - 1.2) <= 1e-9);
  CHECK(std::abs(back.y.back() - 0.9) <= 1e-9);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(integrate(-1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(1.0, 0.0, 1.0), std::invalid_argument);
  IntegratorConfig c;
  c.max_time = 1.0;
  CHECK_THROWS_AS(measure_frequency(integrate(1.0, 1.1, 1.0, c)), IntegrationError);
}

TEST_CASE("interpolation between samples") {
  IntegratorConfig c;
  c.max_time = 2.0;
  c.sample_stride = 50;
  auto coarse = integrate(1.0, 1.2, 1.0, c);
  c.sample_stride = 1;
  auto fine = integrate(1.0, 1.2, 1.0, c);
  for (std::size_t i = 7; i < fine.size(); i += 97) {
    auto [x, y] = interpolate(coarse, fine.times[i]);
    CHECK(std::abs(x - fine.x[i]) <= 1e-7);
    CHECK(std::abs(y - fine.y[i]) <= 1e-7);
  }
}

TEST_CASE("numeric series and the amplitude scaling") {
  auto ns = to_numeric(series_alpha_1(), 1.0, 0.0);
  CHECK(ns.max_order() == 8);
  CHECK(ns.frequency(0.0, 8) == 1.0);
  CHECK(ns.frequency(0.1, 8) ==
        doctest::Approx(1 - 1e-2 / 12 - 17e-4 / 1728 - 707e-6 / 414720 - 299203e-8 / 895795200).epsilon(1e-15));
  // x(tau; eps, A) = A x(tau; eps A, 1).
  std::vector<double> grid{0.0, 0.7, 2.1, 5.0};
  auto s = evaluate_solution(ns, 0.05, 2.0, grid, 8);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto [xi, eta] = ns.state(0.1, grid[i], 8);
    CHECK(s.xi[i] == doctest::Approx(2 * xi).epsilon(1e-14));
    CHECK(s.eta[i] == doctest::Approx(2 * eta).epsilon(1e-14));
  }
  CHECK(s.omega == doctest::Approx(ns.frequency(0.1, 8)).epsilon(1e-15));
  CHECK(ns.state(0.0, 0.3, 8).first == doctest::Approx(std::cos(0.3)));
}

TEST_CASE("series orbit tracks the numeric orbit") {
  auto ns = to_numeric(series_alpha_1(), 1.0, 0.0);
  const double a = 0.05;
  // Start the integrator on the series orbit at tau = 0.
  auto [xi0, eta0] = ns.state(a, 0.0, 8);
  IntegratorConfig c;
  c.max_time = 3.5 * 2 * M_PI;
  auto orbit = integrate(1.0, 1 + a * xi0, 1 + a * eta0, c);
  auto high = compare_orbit(ns, 8, a, orbit);
  auto low = compare_orbit(ns, 0, a, orbit);
  CHECK(high.max_distance < 1e-8);
  CHECK(high.max_distance < low.max_distance);
  CHECK(std::abs(measure_frequency(orbit) - ns.frequency(a, 8)) <= 1e-10);
  CHECK(orbit_csv(orbit).rfind("t,x,y\n", 0) == 0);
  CHECK(comparison_csv(high).rfind("tau,xi_series,eta_series,xi_numeric,eta_numeric\n", 0) == 0);
}
