#include "lvlp/approximants.hpp"

#include <string>

#include "lvlp/error.hpp"
#include "lvlp/exact_linalg.hpp"

namespace lvlp {

namespace {

void require_length(const PowerSeries& f, std::size_t needed, const char* what) {
  if (f.size() < needed)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(needed) + " coefficients, have " +
                                std::to_string(f.size()));
}

std::vector<Rational> slice(const std::vector<Rational>& v, std::size_t from, std::size_t count) {
  return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + count)};
}

}  // namespace

PowerSeries series_from_engine(const PerturbationSeries<SqrtAlphaPoly>& series, const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (series.gauge != GaugeMode::kSimplifiedXi)
    throw EngineError("the frequency series is defined in the simplified-xi gauge");
  PowerSeries f;
  for (std::size_t n = 0; n < series.orders.size(); n += 2) {
    const SqrtAlphaPoly& w = series.orders[n].omega;
    if (!w.even_part().is_zero())
      throw EngineError("omega_" + std::to_string(n) + " is not sqrt(alpha) times a polynomial in alpha");
    f.coefficients.push_back(w.div_sqrt_alpha().evaluate_even_at(alpha));
  }
  return f;
}

PowerSeries series_from_engine(const PerturbationSeries<SqrtAlphaNumber>& series) {
  if (series.gauge != GaugeMode::kSimplifiedXi)
    throw EngineError("the frequency series is defined in the simplified-xi gauge");
  PowerSeries f;
  for (std::size_t n = 0; n < series.orders.size(); n += 2) {
    const SqrtAlphaNumber& w = series.orders[n].omega;
    if (w.rational_part() != 0)
      throw EngineError("omega_" + std::to_string(n) + " has a component without sqrt(alpha)");
    f.coefficients.push_back(w.surd_part());
  }
  return f;
}

std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     std::size_t terms) {
  std::vector<Rational> c(terms);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

PadeApprox pade_fit(const PowerSeries& f, std::size_t K, std::size_t L) {
  require_length(f, K + L + 1, "Pade fit");
  const auto& c = f.coefficients;
  std::vector<Rational> q(L + 1);
  q[0] = 1;
  if (L > 0) {
    // sum_{k=1}^{L} q_k c_{i-k} = -c_i  for i = K+1 .. K+L
    RationalMatrix a(L, std::vector<Rational>(L));
    std::vector<Rational> rhs(L);
    for (std::size_t row = 0; row < L; ++row) {
      const std::size_t i = K + 1 + row;
      for (std::size_t k = 1; k <= L; ++k) a[row][k - 1] = i >= k ? f[i - k] : Rational(0);
      rhs[row] = -c[i];
    }
    auto sol = solve_exact(a, rhs);
    for (std::size_t k = 1; k <= L; ++k) q[k] = sol[k - 1];
  }
  PadeApprox out;
  out.K = K;
  out.L = L;
  out.denominator = RationalPoly(q);
  out.numerator = RationalPoly(series_product(slice(c, 0, K + 1), q, K + 1));
  return out;
}

QuadHermitePade hermite_pade_fit(const PowerSeries& f, std::size_t K, std::size_t L, std::size_t M) {
  const std::size_t eqs = K + L + M + 2;
  require_length(f, eqs, "Hermite-Pade fit");
  const std::vector<Rational> lin = slice(f.coefficients, 0, eqs);
  const std::vector<Rational> sq = series_product(lin, lin, eqs);

  // Unknowns ordered p_0..p_K, q_0..q_L, r_0..r_M.
  const std::size_t unknowns = eqs + 1;
  RationalMatrix a(eqs, std::vector<Rational>(unknowns));
  for (std::size_t i = 0; i < eqs; ++i) {
    for (std::size_t k = 0; k <= K && k <= i; ++k) a[i][k] = sq[i - k];
    for (std::size_t k = 0; k <= L && k <= i; ++k) a[i][K + 1 + k] = lin[i - k];
    if (i <= M) a[i][K + L + 2 + i] = 1;
  }
  auto v = null_vector(a);
  QuadHermitePade h;
  h.K = K;
  h.L = L;
  h.M = M;
  h.p = RationalPoly(slice(v, 0, K + 1));
  h.q = RationalPoly(slice(v, K + 1, L + 1));
  h.r = RationalPoly(slice(v, K + L + 2, M + 1));
  return h;
}

std::vector<Rational> taylor_coefficients(const PadeApprox& pade, std::size_t terms) {
  const auto& q = pade.denominator.coefficients();
  if (q.empty() || q[0] == 0) throw AlgebraError("Pade denominator vanishes at the origin");
  std::vector<Rational> out(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    Rational acc = pade.numerator.coefficient(i);
    for (std::size_t k = 1; k < q.size() && k <= i; ++k) acc -= q[k] * out[i - k];
    out[i] = acc / q[0];
  }
  return out;
}

std::vector<Rational> hermite_pade_residual(const QuadHermitePade& h, const PowerSeries& f, std::size_t terms) {
  std::vector<Rational> lin(terms);
  for (std::size_t j = 0; j < terms; ++j) lin[j] = f[j];
  const std::vector<Rational> sq = series_product(lin, lin, terms);
  auto a = series_product(h.p.coefficients(), sq, terms);
  auto b = series_product(h.q.coefficients(), lin, terms);
  for (std::size_t j = 0; j < terms; ++j) a[j] += b[j] + h.r.coefficient(j);
  return a;
}

}  // namespace lvlp
