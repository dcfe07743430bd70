#pragma once

#include <memory>
#include <optional>
#include <string>

#include "lvlp/rational.hpp"
#include "lvlp/real.hpp"
#include "lvlp/sqrt_alpha_poly.hpp"

namespace lvlp {

/// Element r + q*sqrt(alpha) of Q[s]/(s^2 - alpha) for one fixed rational
/// alpha > 0. This is the image of SqrtAlphaPoly under s^2 -> alpha, so every
/// exact identity of the symbolic ring survives the reduction. A
/// default-constructed value is zero and carries no alpha; binary operations
/// adopt the alpha of whichever operand has one.
class SqrtAlphaNumber {
 public:
  SqrtAlphaNumber() = default;
  SqrtAlphaNumber(std::shared_ptr<const Rational> alpha, Rational rational_part, Rational surd_part);

  static SqrtAlphaNumber one(const Rational& alpha);
  /// Reduction of a symbolic element at this alpha.
  static SqrtAlphaNumber reduce(const SqrtAlphaPoly& p, std::shared_ptr<const Rational> alpha);

  const Rational& rational_part() const { return r_; }
  const Rational& surd_part() const { return q_; }
  const std::shared_ptr<const Rational>& alpha() const { return alpha_; }

  bool is_zero() const { return r_ == 0 && q_ == 0; }
  std::optional<Rational> as_rational() const;

  SqrtAlphaNumber mul_sqrt_alpha() const;
  /// Always exact: 1/s = s/alpha.
  SqrtAlphaNumber div_sqrt_alpha() const;

  SqrtAlphaNumber& operator+=(const SqrtAlphaNumber& o);
  SqrtAlphaNumber& operator-=(const SqrtAlphaNumber& o);
  SqrtAlphaNumber& operator*=(const Rational& k);

  friend SqrtAlphaNumber operator+(SqrtAlphaNumber a, const SqrtAlphaNumber& b) { return a += b; }
  friend SqrtAlphaNumber operator-(SqrtAlphaNumber a, const SqrtAlphaNumber& b) { return a -= b; }
  friend SqrtAlphaNumber operator-(SqrtAlphaNumber a) {
    a.r_ = -a.r_;
    a.q_ = -a.q_;
    return a;
  }
  friend SqrtAlphaNumber operator*(const SqrtAlphaNumber& a, const SqrtAlphaNumber& b);
  friend SqrtAlphaNumber operator*(SqrtAlphaNumber a, const Rational& k) { return a *= k; }
  /// Compares values; alpha contexts must agree when both are present.
  friend bool operator==(const SqrtAlphaNumber& a, const SqrtAlphaNumber& b);

  /// The representative r + q*s as a symbolic polynomial of degree <= 1.
  SqrtAlphaPoly as_poly() const;
  Real evaluate_at_sqrt(const Real& s) const { return to_real(r_) + to_real(q_) * s; }

 private:
  void adopt(const SqrtAlphaNumber& o);

  Rational r_;
  Rational q_;
  std::shared_ptr<const Rational> alpha_;
};

std::string to_string(const SqrtAlphaNumber& x);

}  // namespace lvlp
