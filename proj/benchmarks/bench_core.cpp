#include <benchmark/benchmark.h>

#include "heisenweyl/gwa.hpp"
#include "heisenweyl/hpq.hpp"
#include "heisenweyl/localize.hpp"
#include "heisenweyl/reps.hpp"

using namespace heisenweyl;

static void BM_PqNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pq_number(n));
}
BENCHMARK(BM_PqNumber)->Arg(10)->Arg(50)->Arg(100);

static void BM_YTimesXPower(benchmark::State& state) {
  HeisenbergAlgebra h;
  const PBWElement xn = h.pow(h.x(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h.multiply(h.y(), xn));
}
BENCHMARK(BM_YTimesXPower)->Arg(5)->Arg(15)->Arg(30);

static void BM_ThetaPower(benchmark::State& state) {
  HeisenbergAlgebra h;
  const PBWElement theta = h.theta();
  for (auto _ : state) benchmark::DoNotOptimize(h.pow(theta, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaPower)->Arg(2)->Arg(4)->Arg(6);

static void BM_OverlapCheck(benchmark::State& state) {
  const RewriteSystem sys = hpq_rules(Scalar::p().inverse());
  for (auto _ : state) benchmark::DoNotOptimize(check_overlaps(sys));
}
BENCHMARK(BM_OverlapCheck);

static void BM_VirasoroResidual(benchmark::State& state) {
  LocalizedAlgebra alg;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(virasoro_residual(alg, n, -n + 1));
}
BENCHMARK(BM_VirasoroResidual)->Arg(2)->Arg(8);

static void BM_TensorGWAProduct(benchmark::State& state) {
  const GWA g = tensor_power(static_cast<int>(state.range(0)), 2, 3);
  const GWAElement u = g.product({g.y(0), g.x(1), g.y(1)});
  const GWAElement v = g.product({g.x(0), g.x(0), g.y(1)});
  for (auto _ : state) benchmark::DoNotOptimize(g.multiply(u, v));
}
BENCHMARK(BM_TensorGWAProduct)->Arg(2)->Arg(3);

static void BM_FockRelations(benchmark::State& state) {
  const FockConfig cfg{2, 2, 3};
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_fock_relations(cfg, D));
}
BENCHMARK(BM_FockRelations)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OscillatorResiduals(benchmark::State& state) {
  const OscillatorMatrices m = build_oscillator(static_cast<int>(state.range(0)), 1.3, 1.7);
  for (auto _ : state) benchmark::DoNotOptimize(oscillator_residuals(m));
}
BENCHMARK(BM_OscillatorResiduals)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
