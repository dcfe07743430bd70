#include "lvlp/rational_poly.hpp"

#include <algorithm>

namespace lvlp {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const Rational& k) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= k;
  return RationalPoly(std::move(c));
}

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::string t;
    std::string zk = k == 1 ? "z" : "z^" + std::to_string(k);
    if (k == 0) {
      t = to_string(c[k]);
    } else if (c[k] == 1) {
      t = zk;
    } else if (c[k] == -1) {
      t = "-" + zk;
    } else {
      t = to_string(c[k]) + "*" + zk;
    }
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
  }
  return out;
}

}  // namespace lvlp
