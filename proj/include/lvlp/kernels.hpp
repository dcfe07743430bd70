#pragma once

#include <cstddef>
#include <vector>

#include "lvlp/trig_poly.hpp"

namespace lvlp::kernels {

/// sum_{j=0}^{n} a(j) * b(n - j) for trigonometric polynomials. Serial
/// reference implementation.
template <class C, class A, class B>
TrigPoly<C> cauchy_product_serial(std::size_t n, A&& a, B&& b) {
  TrigPoly<C> acc;
  for (std::size_t j = 0; j <= n; ++j) acc += a(j) * b(n - j);
  return acc;
}

/// Same sum with the products spread over OpenMP threads. Exact arithmetic
/// makes the result identical to the serial kernel.
template <class C, class A, class B>
TrigPoly<C> cauchy_product_parallel(std::size_t n, A&& a, B&& b) {
  std::vector<TrigPoly<C>> partial(n + 1);
  const long count = static_cast<long>(n) + 1;
#pragma omp parallel for schedule(dynamic, 1)
  for (long j = 0; j < count; ++j) partial[j] = a(static_cast<std::size_t>(j)) * b(n - static_cast<std::size_t>(j));

  // Pairwise tree reduction.
  for (std::size_t stride = 1; stride < partial.size(); stride *= 2) {
    const long pairs = static_cast<long>((partial.size() + 2 * stride - 1) / (2 * stride));
#pragma omp parallel for schedule(dynamic, 1)
    for (long p = 0; p < pairs; ++p) {
      std::size_t i = static_cast<std::size_t>(p) * 2 * stride;
      if (i + stride < partial.size()) partial[i] += partial[i + stride];
    }
  }
  return partial.empty() ? TrigPoly<C>{} : std::move(partial.front());
}

template <class C, class A, class B>
TrigPoly<C> cauchy_product(std::size_t n, A&& a, B&& b, bool parallel) {
  return parallel ? cauchy_product_parallel<C>(n, a, b) : cauchy_product_serial<C>(n, a, b);
}

}  // namespace lvlp::kernels
