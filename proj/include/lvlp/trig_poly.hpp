#pragma once

#include <utility>

#include "lvlp/error.hpp"
#include "lvlp/ring.hpp"

namespace lvlp {

/// Trigonometric polynomial in theta = tau + phi.
template <class C>
using TrigPoly = FourierSum<C, ThetaVar>;

/// The pair (xi, eta) of state components, e.g. W_n or the forcing R_n.
template <class C>
struct VectorTrigPoly {
  TrigPoly<C> xi;
  TrigPoly<C> eta;

  VectorTrigPoly& operator+=(const VectorTrigPoly& o) {
    xi += o.xi;
    eta += o.eta;
    return *this;
  }
  VectorTrigPoly& operator-=(const VectorTrigPoly& o) {
    xi -= o.xi;
    eta -= o.eta;
    return *this;
  }
  friend VectorTrigPoly operator+(VectorTrigPoly a, const VectorTrigPoly& b) { return a += b; }
  friend VectorTrigPoly operator-(VectorTrigPoly a, const VectorTrigPoly& b) { return a -= b; }
  friend VectorTrigPoly operator*(const VectorTrigPoly& a, const C& c) { return {a.xi * c, a.eta * c}; }
  friend bool operator==(const VectorTrigPoly&, const VectorTrigPoly&) = default;

  bool is_zero() const { return xi.is_zero() && eta.is_zero(); }
  VectorTrigPoly derivative() const { return {xi.derivative(), eta.derivative()}; }
};

/// K . W with K = (1/s) [[0, -1], [alpha, 0]], i.e. (-eta/s, s xi).
template <class C>
VectorTrigPoly<C> apply_k(const VectorTrigPoly<C>& w) {
  return {-w.eta.div_sqrt_alpha(), w.xi.mul_sqrt_alpha()};
}

/// Value at theta (phase taken from the evaluation point only for
/// phase-ring coefficients).
template <class C>
Real evaluate_at(const TrigPoly<C>& p, const Real& theta, const EvalPoint& at) {
  Real acc = 0;
  for (const auto& [j, c] : p.sines()) acc += evaluate(c, at) * sin(Real(j) * theta);
  for (const auto& [j, c] : p.cosines()) acc += evaluate(c, at) * (j == 0 ? Real(1) : Real(cos(Real(j) * theta)));
  return acc;
}

/// Substitutes theta = phi (i.e. tau = 0); the value lies in the phase ring.
/// `one` is the unit of that ring (it supplies any alpha context).
template <class C>
phase_ring_t<C> evaluate_at_phase(const TrigPoly<C>& p, const phase_ring_t<C>& one) {
  using P = phase_ring_t<C>;
  P acc;
  if constexpr (is_phase_ring_v<C>) {
    const auto unit = one.constant();
    for (const auto& [j, c] : p.sines()) acc += c * P::sin_term(j, unit);
    for (const auto& [j, c] : p.cosines()) acc += (j == 0 ? c : c * P::cos_term(j, unit));
  } else {
    (void)one;
    for (const auto& [j, c] : p.sines()) acc.add_sin(j, c);
    for (const auto& [j, c] : p.cosines()) acc.add_cos(j, c);
  }
  return acc;
}

}  // namespace lvlp
