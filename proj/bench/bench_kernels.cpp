// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "lvlp/engine.hpp"
#include "lvlp/kernels.hpp"
#include "lvlp/singularity.hpp"

using namespace lvlp;

namespace {

const PerturbationSeries<SqrtAlphaPoly>& symbolic_series() {
  static const auto s = [] {
    EngineOptions o;
    o.parallel = false;
    return LindstedtEngine<SqrtAlphaPoly>(SqrtAlphaPoly(1), o).run(30);
  }();
  return s;
}

template <bool Parallel>
void BM_CauchyProduct(benchmark::State& state) {
  const auto& o = symbolic_series().orders;
  const auto n = static_cast<std::size_t>(state.range(0));
  auto xi = [&](std::size_t j) -> const TrigPoly<SqrtAlphaPoly>& { return o[j].xi; };
  auto eta = [&](std::size_t j) -> const TrigPoly<SqrtAlphaPoly>& { return o[j].eta; };
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::cauchy_product_parallel<SqrtAlphaPoly>(n, xi, eta));
    } else {
      benchmark::DoNotOptimize(kernels::cauchy_product_serial<SqrtAlphaPoly>(n, xi, eta));
    }
  }
}

template <bool Parallel>
void BM_Engine(benchmark::State& state) {
  EngineOptions o;
  o.parallel = Parallel;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        LindstedtEngine<SqrtAlphaPoly>(SqrtAlphaPoly(1), o).run(static_cast<std::size_t>(state.range(0))));
}

template <bool Parallel>
void BM_RadiusScan(benchmark::State& state) {
  RadiusScanOptions o;
  o.max_order = static_cast<std::size_t>(state.range(0));
  o.fits_per_family = 3;
  o.stability.relative_threshold = 0.1;
  o.parallel = Parallel;
  const std::vector<Rational> alphas{Rational(1, 2), Rational(1), Rational(2), Rational(4)};
  for (auto _ : state) benchmark::DoNotOptimize(radius_scan(alphas, o));
}

}  // namespace

BENCHMARK(BM_CauchyProduct<false>)->Arg(10)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyProduct<true>)->Arg(10)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Engine<false>)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Engine<true>)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiusScan<false>)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiusScan<true>)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
