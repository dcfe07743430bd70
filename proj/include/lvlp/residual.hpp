#pragma once

#include <cstddef>
#include <vector>

#include "lvlp/engine.hpp"

namespace lvlp {

/// Coefficients of a^0..a^N after substituting the truncated series into
///   omega xi' + eta + a xi eta = 0,   omega eta' - alpha (xi + a xi eta) = 0.
/// Built directly from the equations, independent of the engine's solver.
template <class C>
std::vector<VectorTrigPoly<C>> equation_residuals(const PerturbationSeries<C>& series, std::size_t max_order) {
  if (series.orders.size() <= max_order) throw EngineError("series is shorter than the requested residual order");
  const auto& o = series.orders;
  std::vector<VectorTrigPoly<C>> out;
  out.reserve(max_order + 1);
  for (std::size_t n = 0; n <= max_order; ++n) {
    TrigPoly<C> dxi, deta, prod;
    for (std::size_t j = 0; j <= n; ++j) {
      dxi += o[n - j].xi.derivative() * o[j].omega;
      deta += o[n - j].eta.derivative() * o[j].omega;
    }
    for (std::size_t j = 0; n > 0 && j < n; ++j) prod += o[j].xi * o[n - 1 - j].eta;
    VectorTrigPoly<C> r;
    r.xi = dxi + o[n].eta + prod;
    r.eta = deta - (o[n].xi + prod).mul_sqrt_alpha().mul_sqrt_alpha();
    out.push_back(std::move(r));
  }
  return out;
}

/// Lowest order whose residual is nonzero, or -1 when all vanish.
template <class C>
long first_nonzero_residual(const PerturbationSeries<C>& series, std::size_t max_order) {
  auto r = equation_residuals(series, max_order);
  for (std::size_t n = 0; n < r.size(); ++n)
    if (!r[n].is_zero()) return static_cast<long>(n);
  return -1;
}

}  // namespace lvlp
