#include "lvlp/sqrt_alpha_poly.hpp"

#include <algorithm>

#include "lvlp/error.hpp"

namespace lvlp {

SqrtAlphaPoly::SqrtAlphaPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

SqrtAlphaPoly SqrtAlphaPoly::from_coefficients(std::vector<Rational> coefficients) {
  SqrtAlphaPoly p;
  p.c_ = std::move(coefficients);
  for (auto& c : p.c_) c.canonicalize();
  p.trim();
  return p;
}

SqrtAlphaPoly SqrtAlphaPoly::monomial(const Rational& c, std::size_t power) {
  SqrtAlphaPoly p;
  if (c == 0) return p;
  p.c_.assign(power + 1, Rational(0));
  p.c_[power] = c;
  return p;
}

void SqrtAlphaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<Rational> SqrtAlphaPoly::as_rational() const {
  if (c_.empty()) return Rational(0);
  if (c_.size() == 1) return c_[0];
  return std::nullopt;
}

SqrtAlphaPoly SqrtAlphaPoly::even_part() const {
  SqrtAlphaPoly p = *this;
  for (std::size_t k = 1; k < p.c_.size(); k += 2) p.c_[k] = 0;
  p.trim();
  return p;
}

SqrtAlphaPoly SqrtAlphaPoly::odd_part() const {
  SqrtAlphaPoly p = *this;
  for (std::size_t k = 0; k < p.c_.size(); k += 2) p.c_[k] = 0;
  p.trim();
  return p;
}

SqrtAlphaPoly SqrtAlphaPoly::mul_sqrt_alpha() const {
  SqrtAlphaPoly p;
  if (c_.empty()) return p;
  p.c_.reserve(c_.size() + 1);
  p.c_.emplace_back(0);
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

SqrtAlphaPoly SqrtAlphaPoly::div_sqrt_alpha() const {
  if (c_.empty()) return {};
  if (c_[0] != 0)
    throw AlgebraError("division by sqrt(alpha) is not exact for " + to_string(*this));
  SqrtAlphaPoly p;
  p.c_.assign(c_.begin() + 1, c_.end());
  return p;
}

SqrtAlphaPoly& SqrtAlphaPoly::operator+=(const SqrtAlphaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

SqrtAlphaPoly& SqrtAlphaPoly::operator-=(const SqrtAlphaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

SqrtAlphaPoly& SqrtAlphaPoly::operator*=(const Rational& q) {
  if (q == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= q;
  return *this;
}

SqrtAlphaPoly operator-(SqrtAlphaPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

SqrtAlphaPoly operator*(const SqrtAlphaPoly& a, const SqrtAlphaPoly& b) {
  SqrtAlphaPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.c_.size() == 1 && b.c_.size() == 1) {
    r.c_.push_back(a.c_[0] * b.c_[0]);
    return r;
  }
  // Multiply integer numerators over common denominators, then canonicalize
  // each output coefficient once.
  const Integer da = common_denominator(a.c_), db = common_denominator(b.c_);
  std::vector<Integer> na(a.c_.size()), nb(b.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) na[i] = a.c_[i].get_num() * (da / a.c_[i].get_den());
  for (std::size_t j = 0; j < b.c_.size(); ++j) nb[j] = b.c_[j].get_num() * (db / b.c_[j].get_den());
  std::vector<Integer> acc(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
  }
  const Integer den = da * db;
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    r.c_[k] = Rational(acc[k], den);
    r.c_[k].canonicalize();
  }
  r.trim();
  return r;
}

Real SqrtAlphaPoly::evaluate_at_sqrt(const Real& s) const {
  Real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + to_real(*it);
  return acc;
}

Rational SqrtAlphaPoly::evaluate_even_at(const Rational& alpha) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (k % 2 == 1) {
      if (c_[k] != 0) throw AlgebraError("odd power of sqrt(alpha) in " + to_string(*this));
      continue;
    }
    acc = acc * alpha + c_[k];
  }
  return acc;
}

}  // namespace lvlp
