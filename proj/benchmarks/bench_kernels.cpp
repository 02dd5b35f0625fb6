#include <benchmark/benchmark.h>

#include <cmath>

#include "pisot/algebraic_core.hpp"
#include "pisot/refinement.hpp"
#include "pisot/solenoid.hpp"
#include "pisot/zero_density.hpp"

using namespace pisot;

static void BM_CertifiedRoots(benchmark::State& state) {
  const std::vector<std::int64_t> cubic{-1, -1, 0};
  const std::vector<std::int64_t> octic{-3, 0, 0, 0, 0, 0, 0, -3};
  const auto& coeffs = state.range(0) == 3 ? cubic : octic;
  for (auto _ : state) benchmark::DoNotOptimize(make_field(coeffs));
}
BENCHMARK(BM_CertifiedRoots)->Arg(3)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_SymbolScan(benchmark::State& state) {
  const RefinementMask m = builtin_mask("dyadic");
  for (auto _ : state) {
    double lowest = INFINITY;
    for (int i = 0; i <= 12800; ++i) lowest = std::min(lowest, std::abs(eval_symbol(m, 0.01 * i).scalar()));
    benchmark::DoNotOptimize(lowest);
  }
}
BENCHMARK(BM_SymbolScan)->Unit(benchmark::kMillisecond);

static void BM_EvalPhihat(benchmark::State& state) {
  const RefinementMask m = builtin_mask(state.range(0) == 0 ? "boxcar" : "golden_vector");
  double y = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_phihat(m, y));
    y = y > 8.0 ? 0.1 : y + 0.37;
  }
}
BENCHMARK(BM_EvalPhihat)->Arg(0)->Arg(1);

static void BM_PhihatOrbit(benchmark::State& state) {
  const RefinementMask m = builtin_mask("bernoulli");
  const FieldElement one = FieldElement::rational(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(phihat_orbit(m, one, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PhihatOrbit)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateY(benchmark::State& state) {
  const NumberField f = make_field({-1, -1});
  const LatticeCylinder cyl = make_cylinder(f, static_cast<double>(state.range(0)), make_u_neighborhood(f, 0, {0.1}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Y(f, cyl, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_EnumerateY)->Args({100000, 1})->Args({100000, 4})->Unit(benchmark::kMillisecond);

static void BM_NormCount(benchmark::State& state) {
  const NumberField f = make_field({-1, -1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(count_norm_values(f, state.range(0), 0, 1));
}
BENCHMARK(BM_NormCount)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
