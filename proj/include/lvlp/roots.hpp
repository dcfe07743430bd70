#pragma once

#include <vector>

#include "lvlp/approximants.hpp"
#include "lvlp/rational_poly.hpp"
#include "lvlp/real.hpp"

namespace lvlp {

struct RootOptions {
  unsigned decimal_digits = 60;  ///< working precision
  unsigned max_iterations = 2000;
};

/// All complex roots with multiplicity (Aberth iteration followed by Newton
/// polishing), ordered by modulus then argument. Exact zero roots are split
/// off first; a constant polynomial has none. Results carry the precision of
/// `options.decimal_digits`.
std::vector<Complex> polynomial_roots(const RationalPoly& p, const RootOptions& options = {});

/// Roots of Q^2 - 4 P R.
std::vector<Complex> discriminant_roots(const QuadHermitePade& h, const RootOptions& options = {});

/// |p(z)| at the current precision.
Real residual_at(const RationalPoly& p, const Complex& z);

/// Sum of |coefficient| (the norm the residual bound is measured against).
Real coefficient_norm(const RationalPoly& p);

}  // namespace lvlp
