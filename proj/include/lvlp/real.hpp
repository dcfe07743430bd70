#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "lvlp/rational.hpp"

namespace lvlp {

/// Configurable-precision binary floating point (MPFR). The working precision
/// is the default precision; see PrecisionGuard.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDecimalDigits = 50;

/// Sets the default Real precision (decimal digits) for its lifetime. The
/// setting is process-wide; a guard that matches the current precision writes
/// nothing, so parallel code sets the precision once outside the region.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned decimal_digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Correctly rounded conversion at the current precision.
Real to_real(const Rational& q);

Real pi_real();

/// Minimal complex number over Real; std::complex is unspecified for
/// non-builtin scalar types.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex conj() const { return {re, -im}; }
};

Real abs(const Complex& z);

}  // namespace lvlp
