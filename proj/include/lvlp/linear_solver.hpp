#pragma once

#include <set>
#include <utility>

#include "lvlp/error.hpp"
#include "lvlp/trig_poly.hpp"

namespace lvlp {

/// True when the first harmonic of the forcing would drive the homogeneous
/// solution resonantly, i.e. unless s F_s = G_c and s F_c = -G_s.
template <class C>
bool is_resonant(const VectorTrigPoly<C>& forcing) {
  auto [fs, fc] = forcing.xi.harmonic(1);
  auto [gs, gc] = forcing.eta.harmonic(1);
  return !(fs.mul_sqrt_alpha() == gc && fc.mul_sqrt_alpha() == -gs);
}

/// Periodic particular solution of W' = K W + R by undetermined coefficients,
/// harmonic by harmonic. The free first-harmonic homogeneous part is fixed so
/// that xi has no first harmonic. Throws EngineError on resonant forcing.
template <class C>
VectorTrigPoly<C> particular_solution(const VectorTrigPoly<C>& forcing) {
  if (is_resonant(forcing))
    throw EngineError("forcing has a resonant first harmonic; secular terms were not removed");

  std::set<int> harmonics;
  for (const auto* m : {&forcing.xi.sines(), &forcing.xi.cosines(), &forcing.eta.sines(), &forcing.eta.cosines()})
    for (const auto& [j, c] : *m) harmonics.insert(j);

  VectorTrigPoly<C> w;
  for (int j : harmonics) {
    auto [fs, fc] = forcing.xi.harmonic(j);
    auto [gs, gc] = forcing.eta.harmonic(j);
    if (j == 1) {
      w.eta.add_sin(1, fs.mul_sqrt_alpha());
      w.eta.add_cos(1, fc.mul_sqrt_alpha());
      continue;
    }
    const Rational jr(j);
    const Rational inv = make_rational(1, j * j - 1);
    C p = (gs.div_sqrt_alpha() + fc * jr) * inv;  // xi sin
    C q = (gc.div_sqrt_alpha() - fs * jr) * inv;  // xi cos
    C r = (fs + q * jr).mul_sqrt_alpha();         // eta sin
    C t = (fc - p * jr).mul_sqrt_alpha();         // eta cos
    w.xi.add_sin(j, p);
    w.xi.add_cos(j, q);
    w.eta.add_sin(j, r);
    w.eta.add_cos(j, t);
  }
  return w;
}

/// u (cos th, s sin th) + v (sin th, -s cos th): the general solution of W' = K W.
template <class C>
VectorTrigPoly<C> homogeneous_mode(const C& u, const C& v) {
  VectorTrigPoly<C> w;
  w.xi.add_cos(1, u);
  w.xi.add_sin(1, v);
  w.eta.add_sin(1, u.mul_sqrt_alpha());
  w.eta.add_cos(1, -v.mul_sqrt_alpha());
  return w;
}

/// Mode amplitudes (u, v) that move W(tau = 0) of `particular` to (a, b).
/// `one` is the unit of the phase ring.
template <class C>
  requires is_phase_ring_v<C>
std::pair<C, C> modes_from_initial(const VectorTrigPoly<C>& particular, const C& a, const C& b, const C& one) {
  const auto unit = one.constant();
  const C cos_phi = C::cos_term(1, unit);
  const C sin_phi = C::sin_term(1, unit);
  C x_gap = a - evaluate_at_phase(particular.xi, one);
  C y_gap = (b - evaluate_at_phase(particular.eta, one)).div_sqrt_alpha();
  return {x_gap * cos_phi + y_gap * sin_phi, x_gap * sin_phi - y_gap * cos_phi};
}

/// Solution of W' = K W + R with W(0) = (a, b), i.e.
/// exp(tau K)(a, b) plus the convolution integral, built per harmonic.
template <class C>
  requires is_phase_ring_v<C>
VectorTrigPoly<C> solve_linear(const VectorTrigPoly<C>& forcing, const C& a, const C& b, const C& one) {
  VectorTrigPoly<C> w = particular_solution(forcing);
  auto [u, v] = modes_from_initial(w, a, b, one);
  return w + homogeneous_mode(u, v);
}

/// W' - K W - R; identically zero for an exact solution.
template <class C>
VectorTrigPoly<C> linear_residual(const VectorTrigPoly<C>& w, const VectorTrigPoly<C>& forcing) {
  return w.derivative() - apply_k(w) - forcing;
}

}  // namespace lvlp
