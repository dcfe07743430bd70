#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lvlp/engine.hpp"

namespace lvlp {

/// Classical RK4. Every step is checked against two half steps; the step is
/// halved while the difference exceeds `tolerance` and regrows toward `step`
/// once it is comfortably below.
struct IntegratorConfig {
  double step = 1e-3;
  double tolerance = 1e-12;
  double max_time = 100.0;  ///< negative integrates backward in time
  double min_step = 1e-10;
  /// Keep every k-th accepted step in the sample (the endpoint is always kept).
  std::size_t sample_stride = 1;
};

/// Numeric orbit of x' = x - x y, y' = alpha (x y - y).
struct OrbitSample {
  double alpha = 1.0;
  std::vector<double> times;
  std::vector<double> x;
  std::vector<double> y;
  /// max |V(t) - V(0)| with V = alpha (x - ln x) + (y - ln y).
  double conserved_drift = 0.0;
  std::size_t rejected_steps = 0;

  std::size_t size() const { return times.size(); }
};

double first_integral(double alpha, double x, double y);

/// Throws std::invalid_argument for non-positive inputs and IntegrationError
/// on step underflow or loss of positivity.
OrbitSample integrate(double alpha, double x0, double y0, const IntegratorConfig& config = {});

/// State at time t inside the sampled range (cubic Hermite interpolation).
std::pair<double, double> interpolate(const OrbitSample& orbit, double t);

/// 2 pi / mean return time through y = y(0) on its rising side. Throws
/// IntegrationError with fewer than two crossings.
double measure_frequency(const OrbitSample& orbit);

/// Numeric values of a perturbation series at fixed alpha and phi:
/// xi(tau) = sum_n a^n xi_n(tau + phi), omega = sum_n a^n omega_n.
struct NumericSeries {
  struct Harmonics {
    std::vector<double> sin;  ///< index j = harmonic j (entry 0 unused)
    std::vector<double> cos;
  };
  double alpha = 1.0;
  double phi = 0.0;
  std::vector<Harmonics> xi;
  std::vector<Harmonics> eta;
  std::vector<double> omega;

  std::size_t max_order() const { return omega.empty() ? 0 : omega.size() - 1; }
  /// Partial sums through `order` (clamped to the available orders).
  double frequency(double a, std::size_t order) const;
  std::pair<double, double> state(double a, double tau, std::size_t order) const;
};

/// Samples of the series solution for amplitude A and small parameter eps,
/// using xi(tau; eps, A) = A xi(tau; eps A, 1) and omega(eps, A) = omega(eps A, 1).
struct SolutionSamples {
  std::vector<double> tau;
  std::vector<double> xi;
  std::vector<double> eta;
  double omega = 0.0;
};

SolutionSamples evaluate_solution(const NumericSeries& series, double eps, double amplitude,
                                  const std::vector<double>& tau_grid, std::size_t order);

template <class C>
NumericSeries to_numeric(const PerturbationSeries<C>& series, double alpha, double phi) {
  PrecisionGuard guard(kDefaultDecimalDigits);
  const EvalPoint at = make_eval_point(Real(alpha), Real(phi));
  auto harmonics = [&](const TrigPoly<C>& p) {
    NumericSeries::Harmonics h;
    const auto top = static_cast<std::size_t>(std::max(p.max_harmonic(), 0));
    h.sin.assign(top + 1, 0.0);
    h.cos.assign(top + 1, 0.0);
    for (const auto& [j, c] : p.sines()) h.sin[static_cast<std::size_t>(j)] = static_cast<double>(evaluate(c, at));
    for (const auto& [j, c] : p.cosines()) h.cos[static_cast<std::size_t>(j)] = static_cast<double>(evaluate(c, at));
    return h;
  };
  NumericSeries out;
  out.alpha = alpha;
  out.phi = phi;
  for (const auto& o : series.orders) {
    out.xi.push_back(harmonics(o.xi));
    out.eta.push_back(harmonics(o.eta));
    out.omega.push_back(static_cast<double>(evaluate(o.omega, at)));
  }
  return out;
}

struct OrbitComparison {
  double max_distance = 0.0;
  double rms_distance = 0.0;
  /// tau, xi_series, eta_series, xi_numeric, eta_numeric
  std::vector<std::array<double, 5>> rows;
};

/// Pointwise distance in the (xi, eta) plane over one period of the series,
/// matching series time tau with numeric time t = tau / omega. The numeric
/// state is mapped back through x = 1 + a xi, y = 1 + a eta; at a = 0 the
/// orbit is the linear limit and the distance is zero.
OrbitComparison compare_orbit(const NumericSeries& series, std::size_t order, double a, const OrbitSample& orbit,
                              std::size_t samples = 400);

/// "t,x,y" with a header row.
std::string orbit_csv(const OrbitSample& orbit, int digits = 10);
/// "tau,xi_series,eta_series,xi_numeric,eta_numeric" with a header row.
std::string comparison_csv(const OrbitComparison& cmp, int digits = 10);

}  // namespace lvlp
