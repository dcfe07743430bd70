#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "lvlp/fourier_sum.hpp"
#include "lvlp/rational.hpp"
#include "lvlp/real.hpp"
#include "lvlp/sqrt_alpha_number.hpp"
#include "lvlp/sqrt_alpha_poly.hpp"

namespace lvlp {

struct PhiVar {};
struct ThetaVar {};

/// c_0 + sum_k u_k sin(k phi) + v_k cos(k phi) over a phi-free ring B.
template <class B>
using PhiCoefficient = FourierSum<B, PhiVar>;

/// Operations the trigonometric and perturbation layers need from a
/// coefficient ring. The default value must be the ring's zero.
template <class C>
concept CoefficientRing = std::regular<C> && requires(const C& x, const C& y, const Rational& q) {
  { x + y } -> std::convertible_to<C>;
  { x - y } -> std::convertible_to<C>;
  { -x } -> std::convertible_to<C>;
  { x * y } -> std::convertible_to<C>;
  { x * q } -> std::convertible_to<C>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.as_rational() } -> std::convertible_to<std::optional<Rational>>;
  { x.mul_sqrt_alpha() } -> std::convertible_to<C>;
  { x.div_sqrt_alpha() } -> std::convertible_to<C>;
};

template <class C>
struct is_phase_ring : std::false_type {};
template <class B>
struct is_phase_ring<PhiCoefficient<B>> : std::true_type {};
template <class C>
inline constexpr bool is_phase_ring_v = is_phase_ring<C>::value;

/// Smallest ring holding both C and the functions sin(k phi), cos(k phi).
template <class C>
using phase_ring_t = std::conditional_t<is_phase_ring_v<C>, C, PhiCoefficient<C>>;

template <class C>
phase_ring_t<C> lift_to_phase(const C& c) {
  if constexpr (is_phase_ring_v<C>) {
    return c;
  } else {
    return PhiCoefficient<C>(c);
  }
}

/// Re-expresses a Fourier sum over another coefficient ring.
template <class D, class C, class Var, class F>
FourierSum<D, Var> convert_coefficients(const FourierSum<C, Var>& s, F&& f) {
  FourierSum<D, Var> r;
  for (const auto& [j, c] : s.sines()) r.add_sin(j, f(c));
  for (const auto& [j, c] : s.cosines()) r.add_cos(j, f(c));
  return r;
}

/// Numeric evaluation point: s = sqrt(alpha) and the phase.
struct EvalPoint {
  Real sqrt_alpha;
  Real phi;
};

/// Throws std::invalid_argument for alpha <= 0.
EvalPoint make_eval_point(const Real& alpha, const Real& phi);

inline Real evaluate(const SqrtAlphaPoly& x, const EvalPoint& at) { return x.evaluate_at_sqrt(at.sqrt_alpha); }
inline Real evaluate(const SqrtAlphaNumber& x, const EvalPoint& at) { return x.evaluate_at_sqrt(at.sqrt_alpha); }

template <class B>
Real evaluate(const PhiCoefficient<B>& x, const EvalPoint& at) {
  Real acc = 0;
  for (const auto& [k, c] : x.sines()) acc += evaluate(c, at) * sin(Real(k) * at.phi);
  for (const auto& [k, c] : x.cosines()) acc += evaluate(c, at) * (k == 0 ? Real(1) : Real(cos(Real(k) * at.phi)));
  return acc;
}

/// Value of a ring element at sqrt(alpha) and phi, at the current precision.
template <class C>
Real evaluate_numeric(const C& x, const Real& alpha, const Real& phi) {
  return evaluate(x, make_eval_point(alpha, phi));
}

namespace detail {
/// True when a printed coefficient must be parenthesized before "*trig".
bool has_top_level_sum(const std::string& s);
}  // namespace detail

template <class B>
std::string to_string(const PhiCoefficient<B>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto append = [&](const std::string& term) {
    if (out.empty() || term.front() == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  };
  auto term = [](const std::string& c, const char* fn, int k) {
    std::string trig = std::string(fn) + (k == 1 ? "(phi)" : "(" + std::to_string(k) + "*phi)");
    if (c == "1") return trig;
    if (c == "-1") return "-" + trig;
    if (detail::has_top_level_sum(c)) return "(" + c + ")*" + trig;
    return c + "*" + trig;
  };
  if (auto it = x.cosines().find(0); it != x.cosines().end()) append(to_string(it->second));
  int top = x.max_harmonic();
  for (int k = 1; k <= top; ++k) {
    if (auto it = x.sines().find(k); it != x.sines().end()) append(term(to_string(it->second), "sin", k));
    if (auto it = x.cosines().find(k); it != x.cosines().end()) append(term(to_string(it->second), "cos", k));
  }
  return out;
}

}  // namespace lvlp
