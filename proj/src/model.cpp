#include "lvlp/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lvlp/engine.hpp"

namespace lvlp {

std::string to_string(GaugeMode g) {
  switch (g) {
    case GaugeMode::kZeroInitial:
      return "zero-initial";
    case GaugeMode::kSimplifiedXi:
      return "simplified-xi";
    case GaugeMode::kSimplifiedEta:
      return "simplified-eta";
  }
  return "unknown";
}

GaugeMode parse_gauge(std::string_view name) {
  if (name == "zero-initial") return GaugeMode::kZeroInitial;
  if (name == "simplified-xi") return GaugeMode::kSimplifiedXi;
  if (name == "simplified-eta") return GaugeMode::kSimplifiedEta;
  throw std::invalid_argument("unknown gauge '" + std::string(name) +
                              "' (expected zero-initial, simplified-xi or simplified-eta)");
}

ReducedModel reduce_parameters(const ModelParams& p) {
  if (p.a <= 0 || p.b <= 0 || p.c <= 0 || p.d <= 0)
    throw std::invalid_argument("model parameters a, b, c, d must be positive");
  return {p.d / p.a, p.a, p.c / p.d, p.b / p.a};
}

AmplitudePhase invert_initial_conditions(double x0, double y0, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  const double dx = x0 - 1.0;
  const double dy = (y0 - 1.0) / std::sqrt(alpha);
  if (dx == 0.0 && dy == 0.0)
    throw std::invalid_argument("(1, 1) is the stationary point: amplitude 0, phase undefined");
  return {std::hypot(dx, dy), std::atan2(dy, dx)};
}

}  // namespace lvlp
