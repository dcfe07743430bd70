#pragma once

#include "lvlp/rational.hpp"

namespace lvlp {

/// Coefficients of X' = X (a - b Y), Y' = Y (c X - d).
struct ModelParams {
  Rational a, b, c, d;
};

/// One-parameter form x' = x - x y, y' = alpha (-y + x y) with
/// t = time_scale T, x = x_scale X, y = y_scale Y.
struct ReducedModel {
  Rational alpha;
  Rational time_scale;
  Rational x_scale;
  Rational y_scale;
};

/// Throws std::invalid_argument unless a, b, c, d > 0.
ReducedModel reduce_parameters(const ModelParams& p);

/// Expansion parameter a = eps*A and phase phi of the orbit through (x0, y0)
/// about the fixed point (1, 1).
struct AmplitudePhase {
  double a;
  double phi;
};

/// Exact for the zero-initial gauge, where x(0) = 1 + a cos(phi) and
/// y(0) = 1 + a sqrt(alpha) sin(phi); other gauges agree to O(a^2).
/// Throws std::invalid_argument at the stationary point or for alpha <= 0.
AmplitudePhase invert_initial_conditions(double x0, double y0, double alpha);

}  // namespace lvlp
