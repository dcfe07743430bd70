#include "lvlp/sqrt_alpha_number.hpp"

#include "lvlp/error.hpp"

namespace lvlp {

SqrtAlphaNumber::SqrtAlphaNumber(std::shared_ptr<const Rational> alpha, Rational rational_part,
                                 Rational surd_part)
    : r_(std::move(rational_part)), q_(std::move(surd_part)), alpha_(std::move(alpha)) {
  if (!alpha_ || *alpha_ <= 0) throw AlgebraError("SqrtAlphaNumber needs a positive alpha");
}

SqrtAlphaNumber SqrtAlphaNumber::one(const Rational& alpha) {
  return SqrtAlphaNumber(std::make_shared<const Rational>(alpha), 1, 0);
}

SqrtAlphaNumber SqrtAlphaNumber::reduce(const SqrtAlphaPoly& p, std::shared_ptr<const Rational> alpha) {
  Rational even = 0, odd = 0, power = 1;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); k += 2) {
    even += c[k] * power;
    if (k + 1 < c.size()) odd += c[k + 1] * power;
    power *= *alpha;
  }
  return SqrtAlphaNumber(std::move(alpha), even, odd);
}

std::optional<Rational> SqrtAlphaNumber::as_rational() const {
  if (q_ == 0) return r_;
  return std::nullopt;
}

void SqrtAlphaNumber::adopt(const SqrtAlphaNumber& o) {
  if (!o.alpha_) return;
  if (!alpha_) {
    alpha_ = o.alpha_;
  } else if (alpha_ != o.alpha_ && *alpha_ != *o.alpha_) {
    throw AlgebraError("SqrtAlphaNumber operands use different alpha values");
  }
}

SqrtAlphaNumber SqrtAlphaNumber::mul_sqrt_alpha() const {
  SqrtAlphaNumber r = *this;
  if (is_zero()) return r;
  // (r + q s) s = q alpha + r s
  r.r_ = q_ * *alpha_;
  r.q_ = r_;
  return r;
}

SqrtAlphaNumber SqrtAlphaNumber::div_sqrt_alpha() const {
  SqrtAlphaNumber r = *this;
  if (is_zero()) return r;
  // (r + q s) / s = q + (r / alpha) s
  r.r_ = q_;
  r.q_ = r_ / *alpha_;
  return r;
}

SqrtAlphaNumber& SqrtAlphaNumber::operator+=(const SqrtAlphaNumber& o) {
  adopt(o);
  r_ += o.r_;
  q_ += o.q_;
  return *this;
}

SqrtAlphaNumber& SqrtAlphaNumber::operator-=(const SqrtAlphaNumber& o) {
  adopt(o);
  r_ -= o.r_;
  q_ -= o.q_;
  return *this;
}

SqrtAlphaNumber& SqrtAlphaNumber::operator*=(const Rational& k) {
  r_ *= k;
  q_ *= k;
  return *this;
}

SqrtAlphaNumber operator*(const SqrtAlphaNumber& a, const SqrtAlphaNumber& b) {
  SqrtAlphaNumber r;
  r.alpha_ = a.alpha_;
  r.adopt(b);
  if (a.is_zero() || b.is_zero()) return r;
  r.r_ = a.r_ * b.r_ + a.q_ * b.q_ * *r.alpha_;
  r.q_ = a.r_ * b.q_ + a.q_ * b.r_;
  return r;
}

bool operator==(const SqrtAlphaNumber& a, const SqrtAlphaNumber& b) {
  if (a.alpha_ && b.alpha_ && a.alpha_ != b.alpha_ && *a.alpha_ != *b.alpha_) return false;
  return a.r_ == b.r_ && a.q_ == b.q_;
}

SqrtAlphaPoly SqrtAlphaNumber::as_poly() const { return SqrtAlphaPoly::from_coefficients({r_, q_}); }

std::string to_string(const SqrtAlphaNumber& x) { return to_string(x.as_poly()); }

}  // namespace lvlp
