#include "lvlp/singularity.hpp"

#include <algorithm>
#include <sstream>

#include "lvlp/error.hpp"
#include "lvlp/sqrt_alpha_number.hpp"

namespace lvlp {

std::string to_string(ApproximantFamily f) { return f == ApproximantFamily::kPade ? "pade" : "hermite-pade"; }

ApproximantFamily parse_family(const std::string& name) {
  if (name == "pade") return ApproximantFamily::kPade;
  if (name == "hermite-pade" || name == "hp") return ApproximantFamily::kHermitePade;
  throw std::invalid_argument("unknown approximant family '" + name + "'");
}

std::vector<ApproximantOrder> diagonal_orders(ApproximantFamily family, std::size_t length, std::size_t count) {
  std::vector<ApproximantOrder> out;
  // Pade [K/K] needs 2K+1 coefficients; [K,K,K] needs 3K+2.
  long kmax = family == ApproximantFamily::kPade ? (static_cast<long>(length) - 1) / 2
                                                 : (static_cast<long>(length) - 2) / 3;
  for (long k = std::max(1L, kmax - static_cast<long>(count) + 1); k <= kmax; ++k) {
    auto K = static_cast<std::size_t>(k);
    out.push_back({K, K, family == ApproximantFamily::kPade ? 0 : K});
  }
  return out;
}

std::vector<Complex> candidate_roots(const PowerSeries& f, ApproximantFamily family, const ApproximantOrder& order,
                                     const RootOptions& options) {
  if (family == ApproximantFamily::kPade) return polynomial_roots(pade_fit(f, order.K, order.L).denominator, options);
  return discriminant_roots(hermite_pade_fit(f, order.K, order.L, order.M), options);
}

SingularityEstimate stable_singularity(const PowerSeries& f, ApproximantFamily family,
                                       const std::vector<ApproximantOrder>& orders, const StabilityOptions& options) {
  if (orders.size() < 2) throw std::invalid_argument("stable_singularity needs at least two approximant orders");
  PrecisionGuard guard(options.roots.decimal_digits);

  SingularityEstimate est;
  est.family = family;
  std::vector<std::vector<Complex>> fits;
  for (const auto& o : orders) {
    try {
      auto roots = candidate_roots(f, family, o, options.roots);
      // The series is analytic at the origin; roots there are artifacts.
      std::erase_if(roots, [](const Complex& z) { return abs(z) < Real(1e-12); });
      fits.push_back(std::move(roots));
      est.orders_used.push_back(o);
    } catch (const SingularSystemError&) {
      est.orders_skipped.push_back(o);
    } catch (const RankDeficiencyError&) {
      est.orders_skipped.push_back(o);
    }
  }
  if (fits.size() < 2) throw NoStableRootError("fewer than two approximants could be built");

  const std::size_t window = std::clamp<std::size_t>(options.window, 2, fits.size());
  fits.erase(fits.begin(), fits.end() - static_cast<long>(window));
  est.orders_used.erase(est.orders_used.begin(), est.orders_used.end() - static_cast<long>(window));

  bool found = false;
  for (const Complex& start : fits.back()) {
    std::vector<Complex> chain{start};
    bool broken = false;
    for (std::size_t i = fits.size() - 1; i-- > 0;) {
      if (fits[i].empty()) {
        broken = true;
        break;
      }
      const Complex& tail = chain.back();
      auto nearest = std::min_element(fits[i].begin(), fits[i].end(), [&](const Complex& a, const Complex& b) {
        return abs(a - tail) < abs(b - tail);
      });
      chain.push_back(*nearest);
    }
    if (broken) continue;
    Real spread = 0;
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j) spread = std::max(spread, abs(chain[i] - chain[j]));
    Real radius = abs(start);
    if (spread > Real(options.relative_threshold) * radius) continue;
    if (!found || radius < est.radius) {
      found = true;
      est.location = start;
      est.radius = radius;
      est.stability_spread = spread;
    }
  }
  if (!found)
    throw NoStableRootError("no " + to_string(family) + " root is stable within relative spread " +
                            format_real(Real(options.relative_threshold), 3));
  return est;
}

RadiusRow radius_row(const Rational& alpha, const PowerSeries& f, std::size_t order,
                     const RadiusScanOptions& options) {
  RadiusRow row;
  row.alpha = alpha;
  row.order = order;
  for (auto family : options.families) {
    try {
      auto orders = diagonal_orders(family, f.size(), options.fits_per_family);
      if (orders.size() < 2)
        throw NoStableRootError("insufficient coefficients for " + to_string(family) + " approximants");
      auto est = stable_singularity(f, family, orders, options.stability);
      (family == ApproximantFamily::kPade ? row.pade : row.hermite_pade) = std::move(est);
    } catch (const Error& e) {
      row.errors.push_back(to_string(family) + ": " + e.what());
    }
  }
  return row;
}

RadiusRow radius_row(const Rational& alpha, const RadiusScanOptions& options) {
  try {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    EngineOptions eo;
    eo.gauge = GaugeMode::kSimplifiedXi;
    eo.parallel = false;
    LindstedtEngine<SqrtAlphaNumber> engine(SqrtAlphaNumber::one(alpha), eo);
    auto series = engine.run(options.max_order, to_string(alpha));
    return radius_row(alpha, series_from_engine(series), options.max_order, options);
  } catch (const std::exception& e) {
    RadiusRow row;
    row.alpha = alpha;
    row.order = options.max_order;
    row.errors.push_back(e.what());
    return row;
  }
}

std::vector<RadiusRow> radius_scan(const std::vector<Rational>& alphas, const RadiusScanOptions& options) {
  std::vector<RadiusRow> rows(alphas.size());
  PrecisionGuard guard(options.stability.roots.decimal_digits);
  const long count = static_cast<long>(alphas.size());
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) rows[i] = radius_row(alphas[i], options);
  } else {
    for (long i = 0; i < count; ++i) rows[i] = radius_row(alphas[i], options);
  }
  return rows;
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string radius_csv(const std::vector<RadiusRow>& rows, int digits) {
  std::ostringstream os;
  os << "alpha,order,rc_pade,rc_hermite_pade,spread_pade,spread_hp\n";
  auto field = [&](const std::optional<SingularityEstimate>& e, bool spread) {
    if (!e) return std::string();
    return format_real(spread ? e->stability_spread : e->radius, digits);
  };
  for (const auto& r : rows) {
    os << format_real(to_real(r.alpha), digits) << ',' << r.order << ',' << field(r.pade, false) << ','
       << field(r.hermite_pade, false) << ',' << field(r.pade, true) << ',' << field(r.hermite_pade, true) << '\n';
  }
  return os.str();
}

}  // namespace lvlp
