#include "lvlp/ode.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lvlp/error.hpp"

namespace lvlp {

namespace {

struct State {
  double x, y;
};

State rhs(double alpha, const State& s) { return {s.x - s.x * s.y, alpha * (s.x * s.y - s.y)}; }

State rk4(double alpha, const State& s, double h) {
  State k1 = rhs(alpha, s);
  State k2 = rhs(alpha, {s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y});
  State k3 = rhs(alpha, {s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y});
  State k4 = rhs(alpha, {s.x + h * k3.x, s.y + h * k3.y});
  return {s.x + h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x), s.y + h / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y)};
}

}  // namespace

double first_integral(double alpha, double x, double y) { return alpha * (x - std::log(x)) + (y - std::log(y)); }

OrbitSample integrate(double alpha, double x0, double y0, const IntegratorConfig& config) {
  if (!(alpha > 0) || !(x0 > 0) || !(y0 > 0)) throw std::invalid_argument("alpha, x0 and y0 must be positive");
  if (!(config.step > 0) || !(config.tolerance > 0) || !(config.min_step > 0))
    throw std::invalid_argument("step, tolerance and min_step must be positive");

  OrbitSample orbit;
  orbit.alpha = alpha;
  const double direction = config.max_time < 0 ? -1.0 : 1.0;
  const double t_end = config.max_time;
  const double v0 = first_integral(alpha, x0, y0);
  const std::size_t stride = std::max<std::size_t>(config.sample_stride, 1);

  State s{x0, y0};
  double t = 0.0;
  double h = config.step;
  std::size_t accepted = 0;
  orbit.times.push_back(t);
  orbit.x.push_back(s.x);
  orbit.y.push_back(s.y);

  while (direction * (t_end - t) > 0) {
    const double remaining = std::abs(t_end - t);
    const double step = std::min(h, remaining);
    const State full = rk4(alpha, s, direction * step);
    const State half = rk4(alpha, rk4(alpha, s, direction * step / 2), direction * step / 2);
    const double err = std::max(std::abs(full.x - half.x), std::abs(full.y - half.y));
    if (err > config.tolerance && step > config.min_step) {
      h = step / 2;
      ++orbit.rejected_steps;
      if (h < config.min_step) throw IntegrationError("step size underflow at t = " + std::to_string(t));
      continue;
    }
    s = half;
    t = step == remaining ? t_end : t + direction * step;
    if (!(s.x > 0) || !(s.y > 0)) throw IntegrationError("positivity lost at t = " + std::to_string(t));
    orbit.conserved_drift = std::max(orbit.conserved_drift, std::abs(first_integral(alpha, s.x, s.y) - v0));
    ++accepted;
    if (accepted % stride == 0 || t == t_end) {
      orbit.times.push_back(t);
      orbit.x.push_back(s.x);
      orbit.y.push_back(s.y);
    }
    if (err < config.tolerance / 32 && h < config.step) h = std::min(2 * h, config.step);
  }
  return orbit;
}

std::pair<double, double> interpolate(const OrbitSample& orbit, double t) {
  const auto& ts = orbit.times;
  if (ts.empty()) throw std::invalid_argument("empty orbit");
  if (ts.size() == 1) return {orbit.x[0], orbit.y[0]};
  const bool forward = ts.back() >= ts.front();
  // Index i with t between ts[i] and ts[i + 1].
  auto it = forward ? std::upper_bound(ts.begin(), ts.end(), t)
                    : std::upper_bound(ts.begin(), ts.end(), t, std::greater<>());
  std::size_t i = static_cast<std::size_t>(std::max<long>(0, (it - ts.begin()) - 1));
  i = std::min(i, ts.size() - 2);
  const double h = ts[i + 1] - ts[i];
  const double u = (t - ts[i]) / h;
  const State a{orbit.x[i], orbit.y[i]}, b{orbit.x[i + 1], orbit.y[i + 1]};
  const State da = rhs(orbit.alpha, a), db = rhs(orbit.alpha, b);
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
  return {h00 * a.x + h10 * h * da.x + h01 * b.x + h11 * h * db.x,
          h00 * a.y + h10 * h * da.y + h01 * b.y + h11 * h * db.y};
}

double measure_frequency(const OrbitSample& orbit) {
  if (orbit.size() < 3) throw IntegrationError("orbit too short to measure a period");
  const double y0 = orbit.y.front();
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
    const double a = orbit.y[i] - y0, b = orbit.y[i + 1] - y0;
    if (!(a < 0 && b >= 0)) continue;
    // Secant start, then Newton on the interpolant.
    double t = orbit.times[i] + (orbit.times[i + 1] - orbit.times[i]) * (-a) / (b - a);
    for (int k = 0; k < 50; ++k) {
      auto [x, y] = interpolate(orbit, t);
      const double dy = orbit.alpha * (x * y - y);
      if (dy == 0) break;
      const double dt = (y - y0) / dy;
      t -= dt;
      if (std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t))) break;
    }
    crossings.push_back(t);
  }
  if (crossings.size() < 2) throw IntegrationError("fewer than two section crossings");
  const double period = (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return 2 * std::numbers::pi / std::abs(period);
}

double NumericSeries::frequency(double a, std::size_t order) const {
  double acc = 0, p = 1;
  for (std::size_t n = 0; n < omega.size() && n <= order; ++n, p *= a) acc += omega[n] * p;
  return acc;
}

std::pair<double, double> NumericSeries::state(double a, double tau, std::size_t order) const {
  const double theta = tau + phi;
  auto eval = [&](const Harmonics& h) {
    double acc = 0;
    for (std::size_t j = 0; j < h.cos.size(); ++j) {
      if (h.cos[j] != 0) acc += h.cos[j] * std::cos(static_cast<double>(j) * theta);
      if (j > 0 && h.sin[j] != 0) acc += h.sin[j] * std::sin(static_cast<double>(j) * theta);
    }
    return acc;
  };
  double xi = 0, eta = 0, p = 1;
  for (std::size_t n = 0; n < this->xi.size() && n <= order; ++n, p *= a) {
    xi += p * eval(this->xi[n]);
    eta += p * eval(this->eta[n]);
  }
  return {xi, eta};
}

SolutionSamples evaluate_solution(const NumericSeries& series, double eps, double amplitude,
                                  const std::vector<double>& tau_grid, std::size_t order) {
  SolutionSamples out;
  const double a = eps * amplitude;
  out.omega = series.frequency(a, order);
  for (double tau : tau_grid) {
    auto [xi, eta] = series.state(a, tau, order);
    out.tau.push_back(tau);
    out.xi.push_back(amplitude * xi);
    out.eta.push_back(amplitude * eta);
  }
  return out;
}

OrbitComparison compare_orbit(const NumericSeries& series, std::size_t order, double a, const OrbitSample& orbit,
                              std::size_t samples) {
  OrbitComparison cmp;
  const double omega = series.frequency(a, order);
  double sum_sq = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double tau = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    auto [xs, es] = series.state(a, tau, order);
    double xn = xs, en = es;
    if (a != 0) {
      auto [x, y] = interpolate(orbit, tau / omega);
      xn = (x - 1) / a;
      en = (y - 1) / a;
    } else {
      // Linear limit of the numeric orbit.
      std::tie(xn, en) = series.state(0, tau, 0);
    }
    const double d = std::hypot(xs - xn, es - en);
    cmp.max_distance = std::max(cmp.max_distance, d);
    sum_sq += d * d;
    cmp.rows.push_back({tau, xs, es, xn, en});
  }
  cmp.rms_distance = samples ? std::sqrt(sum_sq / static_cast<double>(samples)) : 0.0;
  return cmp;
}

std::string orbit_csv(const OrbitSample& orbit, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << "t,x,y\n";
  for (std::size_t i = 0; i < orbit.size(); ++i) os << orbit.times[i] << ',' << orbit.x[i] << ',' << orbit.y[i] << '\n';
  return os.str();
}

std::string comparison_csv(const OrbitComparison& cmp, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << "tau,xi_series,eta_series,xi_numeric,eta_numeric\n";
  for (const auto& r : cmp.rows) os << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << r[4] << '\n';
  return os.str();
}

}  // namespace lvlp
