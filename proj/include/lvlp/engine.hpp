#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvlp/error.hpp"
#include "lvlp/kernels.hpp"
#include "lvlp/linear_solver.hpp"
#include "lvlp/trig_poly.hpp"

namespace lvlp {

/// How the free homogeneous part (initial values) of each order is chosen.
enum class GaugeMode {
  kZeroInitial,    ///< xi_n(0) = eta_n(0) = 0
  kSimplifiedXi,   ///< first harmonic of xi_n vanishes
  kSimplifiedEta,  ///< first harmonic of eta_n vanishes
};

std::string to_string(GaugeMode g);
/// "zero-initial", "simplified-xi", "simplified-eta".
GaugeMode parse_gauge(std::string_view name);

template <class C>
struct OrderSolution {
  std::size_t n = 0;
  TrigPoly<C> xi;
  TrigPoly<C> eta;
  C omega;
  /// (xi_n(0), eta_n(0)), functions of phi in general.
  std::pair<phase_ring_t<C>, phase_ring_t<C>> gauge_constants;

  VectorTrigPoly<C> w() const { return {xi, eta}; }
};

/// Orders 0..N of the expansion in a = eps*A with amplitude normalized to 1.
template <class C>
struct PerturbationSeries {
  std::string alpha_label;  ///< "symbolic" or the rational alpha
  GaugeMode gauge = GaugeMode::kSimplifiedXi;
  C one;
  std::vector<OrderSolution<C>> orders;

  std::size_t max_order() const { return orders.empty() ? 0 : orders.size() - 1; }
};

struct EngineOptions {
  GaugeMode gauge = GaugeMode::kSimplifiedXi;
  /// The phi-dependent gauge grows quickly; larger runs must opt in.
  std::size_t zero_initial_max_order = 8;
  bool parallel = true;
};

/// Order-n forcing R_n = known + (omega_n / s) * omega_direction, linear in
/// the still-unknown omega_n.
template <class C>
struct Forcing {
  std::size_t n = 0;
  VectorTrigPoly<C> known;
  VectorTrigPoly<C> omega_direction;
};

template <class C>
struct SecularRemoval {
  C omega;
  VectorTrigPoly<C> forcing;
};

/// Amplitudes of the homogeneous modes u (cos, s sin) + v (sin, -s cos).
template <class C>
struct HomogeneousModes {
  C u;
  C v;
};

/// Lindstedt-Poincare recursion for
///   omega xi' = -eta - eps xi eta,   omega eta' = alpha (xi + eps xi eta)
/// over the coefficient ring C. `one` is the ring unit; it carries any alpha
/// context the ring needs.
template <CoefficientRing C>
class LindstedtEngine {
 public:
  explicit LindstedtEngine(C one, EngineOptions options = {}) : one_(std::move(one)), options_(options) {
    if constexpr (is_phase_ring_v<C>) {
      phase_one_ = one_;
    } else {
      phase_one_ = lift_to_phase(one_);
    }
  }

  const EngineOptions& options() const { return options_; }
  const C& one() const { return one_; }

  /// xi_0 = A cos th, eta_0 = s A sin th, omega_0 = s.
  OrderSolution<C> zeroth_order(const Rational& amplitude = 1) const {
    OrderSolution<C> z;
    C a = one_ * amplitude;
    z.xi.add_cos(1, a);
    z.eta.add_sin(1, a.mul_sqrt_alpha());
    z.omega = one_.mul_sqrt_alpha();
    z.gauge_constants = {evaluate_at_phase(z.xi, phase_one_), evaluate_at_phase(z.eta, phase_one_)};
    return z;
  }

  Forcing<C> build_forcing(std::size_t n, const PerturbationSeries<C>& prior) const {
    if (n == 0 || prior.orders.size() < n)
      throw EngineError("forcing of order " + std::to_string(n) + " needs orders 0.." + std::to_string(n - 1));
    const auto& o = prior.orders;
    TrigPoly<C> products = kernels::cauchy_product<C>(
        n - 1, [&](std::size_t j) -> const TrigPoly<C>& { return o[j].xi; },
        [&](std::size_t j) -> const TrigPoly<C>& { return o[j].eta; }, options_.parallel);

    TrigPoly<C> drift_xi, drift_eta;  // sum_{j=1}^{n-1} omega_j W'_{n-j}
    for (std::size_t j = 1; j < n; ++j) {
      if (o[j].omega.is_zero()) continue;
      drift_xi += o[n - j].xi.derivative() * o[j].omega;
      drift_eta += o[n - j].eta.derivative() * o[j].omega;
    }

    Forcing<C> f;
    f.n = n;
    f.known.xi = -(products + drift_xi).div_sqrt_alpha();
    f.known.eta = products.mul_sqrt_alpha() - drift_eta.div_sqrt_alpha();
    f.omega_direction = {-o[0].xi.derivative(), -o[0].eta.derivative()};
    return f;
  }

  /// Picks omega_n so the first harmonic of s F' - G vanishes, checking that
  /// the sine and cosine projections agree on it.
  SecularRemoval<C> remove_secular(const Forcing<C>& f) const {
    TrigPoly<C> known = f.known.xi.derivative().mul_sqrt_alpha() - f.known.eta;
    // Coefficient of omega_n in s F' - G.
    TrigPoly<C> linear = f.omega_direction.xi.derivative() - f.omega_direction.eta.div_sqrt_alpha();

    auto [ks, kc] = known.harmonic(1);
    auto [ls, lc] = linear.harmonic(1);
    std::vector<C> candidates;
    auto project = [&](const C& k, const C& l, const char* which) {
      if (l.is_zero()) {
        if (!k.is_zero())
          throw EngineError("order " + std::to_string(f.n) + ": " + which +
                            " secular projection cannot be removed by omega_n");
        return;
      }
      auto lr = l.as_rational();
      if (!lr) throw EngineError("order " + std::to_string(f.n) + ": non-constant omega_n coefficient");
      candidates.push_back(k * Rational(-1 / *lr));
    };
    project(ks, ls, "sine");
    project(kc, lc, "cosine");
    if (candidates.empty()) throw EngineError("order " + std::to_string(f.n) + ": omega_n is undetermined");
    for (const C& c : candidates)
      if (!(c == candidates.front()))
        throw EngineError("order " + std::to_string(f.n) + ": secular projections demand different omega_n");

    SecularRemoval<C> out;
    out.omega = candidates.front();
    out.forcing = f.known + f.omega_direction * out.omega.div_sqrt_alpha();
    if (is_resonant(out.forcing))
      throw EngineError("order " + std::to_string(f.n) + ": resonance survives secular removal");
    return out;
  }

  HomogeneousModes<C> fix_gauge(const VectorTrigPoly<C>& particular) const {
    switch (options_.gauge) {
      case GaugeMode::kSimplifiedXi:
        return {C{}, C{}};
      case GaugeMode::kSimplifiedEta: {
        auto [r, t] = particular.eta.harmonic(1);
        return {-r.div_sqrt_alpha(), t.div_sqrt_alpha()};
      }
      case GaugeMode::kZeroInitial:
        if constexpr (is_phase_ring_v<C>) {
          auto [u, v] = modes_from_initial(particular, C{}, C{}, one_);
          return {u, v};
        } else {
          throw EngineError("the zero-initial gauge needs a phase-dependent coefficient ring");
        }
    }
    throw EngineError("unknown gauge");
  }

  OrderSolution<C> solve_order(std::size_t n, const PerturbationSeries<C>& prior) const {
    SecularRemoval<C> sr = remove_secular(build_forcing(n, prior));
    VectorTrigPoly<C> w = particular_solution(sr.forcing);
    HomogeneousModes<C> modes = fix_gauge(w);
    w += homogeneous_mode(modes.u, modes.v);

    OrderSolution<C> s;
    s.n = n;
    s.xi = std::move(w.xi);
    s.eta = std::move(w.eta);
    s.omega = std::move(sr.omega);
    s.gauge_constants = {evaluate_at_phase(s.xi, phase_one_), evaluate_at_phase(s.eta, phase_one_)};
    return s;
  }

  PerturbationSeries<C> run(std::size_t max_order, std::string alpha_label = "symbolic") const {
    PerturbationSeries<C> series;
    series.alpha_label = std::move(alpha_label);
    series.gauge = options_.gauge;
    series.one = one_;
    extend(series, max_order);
    return series;
  }

  /// Continues an existing series up to max_order.
  void extend(PerturbationSeries<C>& series, std::size_t max_order) const {
    if (series.gauge != options_.gauge) throw EngineError("series and engine use different gauges");
    if (options_.gauge == GaugeMode::kZeroInitial) {
      if constexpr (!is_phase_ring_v<C>)
        throw EngineError("the zero-initial gauge needs a phase-dependent coefficient ring");
      if (max_order > options_.zero_initial_max_order)
        throw EngineError("zero-initial gauge is limited to order " + std::to_string(options_.zero_initial_max_order) +
                          "; raise the limit explicitly");
    }
    if (series.orders.empty()) series.orders.push_back(zeroth_order());
    for (std::size_t n = series.orders.size(); n <= max_order; ++n) series.orders.push_back(solve_order(n, series));
  }

 private:
  C one_;
  phase_ring_t<C> phase_one_;
  EngineOptions options_;
};

}  // namespace lvlp
