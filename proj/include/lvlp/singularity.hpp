#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lvlp/approximants.hpp"
#include "lvlp/real.hpp"
#include "lvlp/roots.hpp"

namespace lvlp {

enum class ApproximantFamily { kPade, kHermitePade };

std::string to_string(ApproximantFamily f);
/// "pade" or "hermite-pade".
ApproximantFamily parse_family(const std::string& name);

/// Degrees of one approximant. M is ignored for Pade.
struct ApproximantOrder {
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t M = 0;
};

/// Diagonal degrees f[K,K] or f[K,K,K] usable with `length` coefficients,
/// the last `count` of them in ascending order.
std::vector<ApproximantOrder> diagonal_orders(ApproximantFamily family, std::size_t length, std::size_t count);

struct StabilityOptions {
  double relative_threshold = 5e-2;
  /// Number of consecutive successful fits the chain must persist across
  /// (fewer are used when fewer are available, but never less than 2).
  std::size_t window = 3;
  RootOptions roots;
};

struct SingularityEstimate {
  Complex location;  ///< in the z = a^2 plane, from the highest fit
  Real radius;
  Real stability_spread;  ///< max pairwise distance along the chain
  ApproximantFamily family = ApproximantFamily::kPade;
  std::vector<ApproximantOrder> orders_used;
  std::vector<ApproximantOrder> orders_skipped;  ///< blocked or degenerate fits
};

/// Candidate singularities of one fit: denominator zeros (Pade) or
/// discriminant zeros (Hermite-Pade).
std::vector<Complex> candidate_roots(const PowerSeries& f, ApproximantFamily family, const ApproximantOrder& order,
                                     const RootOptions& options = {});

/// The root chain closest to the origin that stays put across the last
/// `window` successful fits. NoStableRootError when none qualifies.
SingularityEstimate stable_singularity(const PowerSeries& f, ApproximantFamily family,
                                       const std::vector<ApproximantOrder>& orders,
                                       const StabilityOptions& options = {});

struct RadiusScanOptions {
  std::size_t max_order = 44;
  std::vector<ApproximantFamily> families{ApproximantFamily::kPade, ApproximantFamily::kHermitePade};
  std::size_t fits_per_family = 5;
  StabilityOptions stability;
  bool parallel = true;  ///< spread alphas over OpenMP threads
};

struct RadiusRow {
  Rational alpha;
  std::size_t order = 0;
  std::optional<SingularityEstimate> pade;
  std::optional<SingularityEstimate> hermite_pade;
  std::vector<std::string> errors;
};

/// Frequency series radius for each alpha (engine over Q(sqrt(alpha))).
/// Failures are recorded per row; the scan always completes.
std::vector<RadiusRow> radius_scan(const std::vector<Rational>& alphas, const RadiusScanOptions& options = {});

/// One row of the scan computed on its own.
RadiusRow radius_row(const Rational& alpha, const RadiusScanOptions& options);

/// Estimates from an existing series.
RadiusRow radius_row(const Rational& alpha, const PowerSeries& f, std::size_t order, const RadiusScanOptions& options);

/// "alpha,order,rc_pade,rc_hermite_pade,spread_pade,spread_hp" with
/// `digits` significant digits and empty fields for missing estimates.
std::string radius_csv(const std::vector<RadiusRow>& rows, int digits = 10);

/// Decimal string with `digits` significant digits.
std::string format_real(const Real& x, int digits);

}  // namespace lvlp
