#include "lvlp/roots.hpp"

#include <algorithm>

#include <boost/multiprecision/mpfr.hpp>

namespace lvlp {

namespace {

using boost::multiprecision::atan2;
using boost::multiprecision::cos;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::sin;

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

struct ValueAndSlope {
  Complex value;
  Complex slope;
};

ValueAndSlope horner2(const std::vector<Complex>& c, const Complex& z) {
  Complex v, d;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

std::vector<Complex> to_complex(const std::vector<Rational>& c) {
  std::vector<Complex> out;
  out.reserve(c.size());
  for (const auto& x : c) out.emplace_back(to_real(x));
  return out;
}

// Aberth-Ehrlich iteration on a polynomial with nonzero constant term.
std::vector<Complex> aberth(const std::vector<Complex>& c, unsigned max_iterations) {
  const std::size_t n = c.size() - 1;
  // Initial circle: geometric mean of the root moduli.
  Real radius = exp((log(abs(c.front())) - log(abs(c.back()))) / Real(n));
  std::vector<Complex> z(n);
  const Real two_pi = 2 * pi_real();
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = two_pi * Real(k) / Real(n) + Real(0.4);
    z[k] = Complex(radius * cos(angle), radius * sin(angle));
  }
  const Real eps = Real(10) * std::numeric_limits<Real>::epsilon();
  std::vector<bool> done(n, false);
  for (unsigned it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      auto [v, d] = horner2(c, z[k]);
      if (v.re == 0 && v.im == 0) {
        done[k] = true;
        continue;
      }
      Complex w = v / d;
      Complex sum;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(Real(1)) / (z[k] - z[j]);
      Complex step = w / (Complex(Real(1)) - w * sum);
      z[k] -= step;
      if (abs(step) <= eps * abs(z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

}  // namespace

Real coefficient_norm(const RationalPoly& p) {
  Real s = 0;
  for (const auto& c : p.coefficients()) s += boost::multiprecision::abs(to_real(c));
  return s;
}

Real residual_at(const RationalPoly& p, const Complex& z) { return abs(horner(to_complex(p.coefficients()), z)); }

std::vector<Complex> polynomial_roots(const RationalPoly& p, const RootOptions& options) {
  PrecisionGuard guard(options.decimal_digits);
  std::vector<Complex> roots;
  if (p.degree() <= 0) return roots;

  const auto& exact = p.coefficients();
  std::size_t zeros = 0;
  while (exact[zeros] == 0) ++zeros;
  for (std::size_t k = 0; k < zeros; ++k) roots.emplace_back(Real(0));

  // Monic reduction keeps the iteration scale-free.
  std::vector<Rational> reduced(exact.begin() + static_cast<long>(zeros), exact.end());
  const Rational lead = reduced.back();
  for (auto& x : reduced) x /= lead;
  if (reduced.size() > 1) {
    auto c = to_complex(reduced);
    auto z = aberth(c, options.max_iterations);
    // Newton polishing; a step is kept only if it lowers the residual.
    for (auto& r : z) {
      for (int pass = 0; pass < 4; ++pass) {
        auto [v, d] = horner2(c, r);
        if (d.re == 0 && d.im == 0) break;
        Complex cand = r - v / d;
        if (abs(horner(c, cand)) < abs(v)) {
          r = cand;
        } else {
          break;
        }
      }
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }

  // Real polynomial: snap tiny imaginary parts so conjugate pairs are exact.
  const Real tiny = boost::multiprecision::pow(Real(10), -Real(options.decimal_digits) / 2);
  for (auto& r : roots)
    if (boost::multiprecision::abs(r.im) <= tiny * (abs(r) + 1)) r.im = 0;
  std::stable_sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    Real ma = abs(a), mb = abs(b);
    if (ma != mb) return ma < mb;
    return atan2(a.im, a.re) < atan2(b.im, b.re);
  });
  return roots;
}

std::vector<Complex> discriminant_roots(const QuadHermitePade& h, const RootOptions& options) {
  return polynomial_roots(h.discriminant(), options);
}

}  // namespace lvlp
