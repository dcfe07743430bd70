#pragma once

#include <string>
#include <vector>

#include "lvlp/rational.hpp"

namespace lvlp {

/// Dense univariate polynomial over Q, ascending powers of z, trimmed.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational operator()(const Rational& z) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const Rational& k);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// e.g. "1-3/2*z+z^2".
std::string to_string(const RationalPoly& p);

}  // namespace lvlp
