#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lvlp/rational.hpp"
#include "lvlp/real.hpp"

namespace lvlp {

/// Polynomial with rational coefficients in the generator s = sqrt(alpha).
/// Entry k of coefficients() multiplies s^k, so even powers are powers of
/// alpha. Trailing zeros are never stored; the zero polynomial is empty.
class SqrtAlphaPoly {
 public:
  SqrtAlphaPoly() = default;
  explicit SqrtAlphaPoly(const Rational& constant);
  explicit SqrtAlphaPoly(long constant) : SqrtAlphaPoly(Rational(constant)) {}

  static SqrtAlphaPoly from_coefficients(std::vector<Rational> coefficients);
  static SqrtAlphaPoly monomial(const Rational& c, std::size_t power);
  static SqrtAlphaPoly sqrt_alpha() { return monomial(1, 1); }
  static SqrtAlphaPoly alpha() { return monomial(1, 2); }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::optional<Rational> as_rational() const;

  /// Parts built from the even / odd powers of s.
  SqrtAlphaPoly even_part() const;
  SqrtAlphaPoly odd_part() const;

  SqrtAlphaPoly mul_sqrt_alpha() const;
  /// Exact division by s; throws AlgebraError when the constant term is nonzero.
  SqrtAlphaPoly div_sqrt_alpha() const;

  SqrtAlphaPoly& operator+=(const SqrtAlphaPoly& o);
  SqrtAlphaPoly& operator-=(const SqrtAlphaPoly& o);
  SqrtAlphaPoly& operator*=(const Rational& q);
  SqrtAlphaPoly& operator*=(const SqrtAlphaPoly& o) { return *this = *this * o; }

  friend SqrtAlphaPoly operator+(SqrtAlphaPoly a, const SqrtAlphaPoly& b) { return a += b; }
  friend SqrtAlphaPoly operator-(SqrtAlphaPoly a, const SqrtAlphaPoly& b) { return a -= b; }
  friend SqrtAlphaPoly operator-(SqrtAlphaPoly a);
  friend SqrtAlphaPoly operator*(const SqrtAlphaPoly& a, const SqrtAlphaPoly& b);
  friend SqrtAlphaPoly operator*(SqrtAlphaPoly a, const Rational& q) { return a *= q; }
  friend bool operator==(const SqrtAlphaPoly& a, const SqrtAlphaPoly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at s.
  Real evaluate_at_sqrt(const Real& s) const;
  /// Value of an even polynomial at a rational alpha; throws if odd powers occur.
  Rational evaluate_even_at(const Rational& alpha) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Canonical string, e.g. "-(sqrt(alpha)*(5*alpha^2+34*alpha+29))/6912".
std::string to_string(const SqrtAlphaPoly& p);

}  // namespace lvlp
