#pragma once

#include <cstddef>
#include <vector>

#include "lvlp/engine.hpp"
#include "lvlp/rational_poly.hpp"
#include "lvlp/sqrt_alpha_number.hpp"
#include "lvlp/sqrt_alpha_poly.hpp"

namespace lvlp {

/// Coefficients d_0, d_1, ... of a power series in z.
struct PowerSeries {
  std::vector<Rational> coefficients;

  std::size_t size() const { return coefficients.size(); }
  Rational operator[](std::size_t j) const { return j < coefficients.size() ? coefficients[j] : Rational(0); }
};

/// P/Q with deg P <= K, deg Q <= L and Q(0) = 1.
struct PadeApprox {
  RationalPoly numerator;
  RationalPoly denominator;
  std::size_t K = 0;
  std::size_t L = 0;
};

/// P f^2 + Q f + R = O(z^(K+L+M+2)).
struct QuadHermitePade {
  RationalPoly p;
  RationalPoly q;
  RationalPoly r;
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t M = 0;

  /// Q^2 - 4 P R.
  RationalPoly discriminant() const { return q * q - p * r * Rational(4); }
};

/// Frequency series d_j = omega_{2j} / sqrt(alpha) at a rational alpha. The
/// series must come from the SimplifiedXi gauge.
PowerSeries series_from_engine(const PerturbationSeries<SqrtAlphaPoly>& series, const Rational& alpha);
PowerSeries series_from_engine(const PerturbationSeries<SqrtAlphaNumber>& series);

/// Matches the series through z^(K+L). Needs K+L+1 coefficients;
/// SingularSystemError for a blocked table entry.
PadeApprox pade_fit(const PowerSeries& f, std::size_t K, std::size_t L);

/// Needs K+L+M+2 coefficients. The null vector (p, q, r) is scaled so its
/// first nonzero entry is 1.
QuadHermitePade hermite_pade_fit(const PowerSeries& f, std::size_t K, std::size_t L, std::size_t M);

/// First `terms` Taylor coefficients of P/Q.
std::vector<Rational> taylor_coefficients(const PadeApprox& pade, std::size_t terms);

/// First `terms` coefficients of P f^2 + Q f + R.
std::vector<Rational> hermite_pade_residual(const QuadHermitePade& h, const PowerSeries& f, std::size_t terms);

/// Truncated product of two series.
std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     std::size_t terms);

}  // namespace lvlp
