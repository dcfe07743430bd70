#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "lvlp/rational.hpp"

namespace lvlp {

/// Finite sum  sum_j a_j sin(j v) + sum_j b_j cos(j v)  in one angle v, with
/// coefficients in a ring C. Harmonics are keyed sparsely; b_0 is the
/// constant term. Zero coefficients are never stored. Var only tags which
/// angle the sum is written in, so sums in different angles do not mix.
template <class C, class Var>
class FourierSum {
 public:
  using coefficient_type = C;
  using coefficient_map = std::map<int, C>;

  FourierSum() = default;
  explicit FourierSum(const C& constant) { add_cos(0, constant); }

  static FourierSum sin_term(int j, const C& c) {
    FourierSum s;
    s.add_sin(j, c);
    return s;
  }
  static FourierSum cos_term(int j, const C& c) {
    FourierSum s;
    s.add_cos(j, c);
    return s;
  }

  const coefficient_map& sines() const { return sin_; }
  const coefficient_map& cosines() const { return cos_; }

  C sin_coefficient(int j) const {
    auto it = sin_.find(j);
    return it == sin_.end() ? C{} : it->second;
  }
  C cos_coefficient(int j) const {
    auto it = cos_.find(j);
    return it == cos_.end() ? C{} : it->second;
  }
  /// (a_j, b_j); zeros when absent.
  std::pair<C, C> harmonic(int j) const { return {sin_coefficient(j), cos_coefficient(j)}; }
  C constant() const { return cos_coefficient(0); }

  bool is_zero() const { return sin_.empty() && cos_.empty(); }
  bool is_constant() const { return sin_.empty() && (cos_.empty() || (cos_.size() == 1 && cos_.begin()->first == 0)); }

  /// Highest harmonic present, -1 for the zero sum.
  int max_harmonic() const {
    int m = -1;
    if (!sin_.empty()) m = std::max(m, sin_.rbegin()->first);
    if (!cos_.empty()) m = std::max(m, cos_.rbegin()->first);
    return m;
  }

  /// Adds c sin(j v); negative j folds by parity, j = 0 vanishes.
  void add_sin(int j, const C& c) {
    if (j == 0 || c.is_zero()) return;
    if (j < 0) {
      accumulate(sin_, -j, -c);
    } else {
      accumulate(sin_, j, c);
    }
  }
  void add_cos(int j, const C& c) {
    if (c.is_zero()) return;
    accumulate(cos_, j < 0 ? -j : j, c);
  }

  FourierSum& operator+=(const FourierSum& o) {
    for (const auto& [j, c] : o.sin_) accumulate(sin_, j, c);
    for (const auto& [j, c] : o.cos_) accumulate(cos_, j, c);
    return *this;
  }
  FourierSum& operator-=(const FourierSum& o) {
    for (const auto& [j, c] : o.sin_) accumulate(sin_, j, -c);
    for (const auto& [j, c] : o.cos_) accumulate(cos_, j, -c);
    return *this;
  }
  friend FourierSum operator+(FourierSum a, const FourierSum& b) { return a += b; }
  friend FourierSum operator-(FourierSum a, const FourierSum& b) { return a -= b; }
  friend FourierSum operator-(const FourierSum& a) {
    return a.map_coefficients([](const C& c) { return -c; });
  }

  friend FourierSum operator*(const FourierSum& a, const C& c) {
    return a.map_coefficients([&](const C& x) { return x * c; });
  }
  friend FourierSum operator*(const C& c, const FourierSum& a) { return a * c; }
  friend FourierSum operator*(const FourierSum& a, const Rational& q) {
    return a.map_coefficients([&](const C& x) { return x * q; });
  }

  /// Product reduced to first powers by the product-to-sum identities.
  friend FourierSum operator*(const FourierSum& a, const FourierSum& b) {
    FourierSum r;
    const Rational half(1, 2);
    for (const auto& [i, x] : a.sin_) {
      for (const auto& [j, y] : b.sin_) {
        C h = x * y * half;  // sin i sin j = [cos(i-j) - cos(i+j)] / 2
        r.add_cos(i - j, h);
        r.add_cos(i + j, -h);
      }
      for (const auto& [j, y] : b.cos_) {
        C h = x * y * half;  // sin i cos j = [sin(i+j) + sin(i-j)] / 2
        r.add_sin(i + j, h);
        r.add_sin(i - j, h);
      }
    }
    for (const auto& [i, x] : a.cos_) {
      for (const auto& [j, y] : b.sin_) {
        C h = x * y * half;
        r.add_sin(j + i, h);
        r.add_sin(j - i, h);
      }
      for (const auto& [j, y] : b.cos_) {
        C h = x * y * half;  // cos i cos j = [cos(i-j) + cos(i+j)] / 2
        r.add_cos(i - j, h);
        r.add_cos(i + j, h);
      }
    }
    return r;
  }

  /// Term-wise d/dv.
  FourierSum derivative() const {
    FourierSum r;
    for (const auto& [j, c] : sin_) r.add_cos(j, c * Rational(j));
    for (const auto& [j, c] : cos_)
      if (j != 0) r.add_sin(j, c * Rational(-j));
    return r;
  }

  template <class F>
  FourierSum map_coefficients(F&& f) const {
    FourierSum r;
    for (const auto& [j, c] : sin_) r.add_sin(j, f(c));
    for (const auto& [j, c] : cos_) r.add_cos(j, f(c));
    return r;
  }

  FourierSum mul_sqrt_alpha() const {
    return map_coefficients([](const C& c) { return c.mul_sqrt_alpha(); });
  }
  FourierSum div_sqrt_alpha() const {
    return map_coefficients([](const C& c) { return c.div_sqrt_alpha(); });
  }

  /// Rational value when the sum is a rational constant.
  std::optional<Rational> as_rational() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return cos_.begin()->second.as_rational();
  }

  friend bool operator==(const FourierSum& a, const FourierSum& b) {
    return a.sin_ == b.sin_ && a.cos_ == b.cos_;
  }

 private:
  static void accumulate(coefficient_map& m, int j, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  coefficient_map sin_;
  coefficient_map cos_;
};

}  // namespace lvlp
