#pragma once

// Small random generators for property tests. Seeds are fixed so failures
// reproduce.

#include <random>

#include "lvlp/approximants.hpp"
#include "lvlp/ring.hpp"
#include "lvlp/trig_poly.hpp"

namespace lvlp::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, long span = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline SqrtAlphaPoly small_poly(Rng& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = small_rational(rng);
  return SqrtAlphaPoly::from_coefficients(std::move(c));
}

inline PhiCoefficient<SqrtAlphaPoly> small_phase(Rng& rng, int max_harmonic = 3) {
  std::uniform_int_distribution<int> h(0, max_harmonic), count(0, 3);
  PhiCoefficient<SqrtAlphaPoly> x;
  for (int i = count(rng); i > 0; --i) x.add_sin(std::max(1, h(rng)), small_poly(rng, 2));
  for (int i = count(rng); i > 0; --i) x.add_cos(h(rng), small_poly(rng, 2));
  return x;
}

template <class C, class Make>
TrigPoly<C> small_trig(Rng& rng, Make&& make, int max_harmonic = 4) {
  std::uniform_int_distribution<int> h(0, max_harmonic), count(0, 3);
  TrigPoly<C> p;
  for (int i = count(rng); i > 0; --i) p.add_sin(std::max(1, h(rng)), make(rng));
  for (int i = count(rng); i > 0; --i) p.add_cos(h(rng), make(rng));
  return p;
}

inline PowerSeries random_series(Rng& rng, std::size_t length) {
  PowerSeries f;
  for (std::size_t j = 0; j < length; ++j) f.coefficients.push_back(small_rational(rng, 40, 12));
  return f;
}

}  // namespace lvlp::testing
