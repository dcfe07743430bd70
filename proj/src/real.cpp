#include "lvlp/real.hpp"

#include <boost/math/constants/constants.hpp>

namespace lvlp {

PrecisionGuard::PrecisionGuard(unsigned decimal_digits) : saved_(Real::default_precision()) {
  if (saved_ != decimal_digits) Real::default_precision(decimal_digits);
}

PrecisionGuard::~PrecisionGuard() {
  if (Real::default_precision() != saved_) Real::default_precision(saved_);
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

}  // namespace lvlp
