#include <benchmark/benchmark.h>

#include "euler_pencil/euler_pencil.hpp"

using namespace ep;

static void BM_ApTable(benchmark::State& state) {
  auto curve = WeierstrassCurve::from_model({0, 0, 0, 8, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ap_table(curve, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApTable)->Arg(1000)->Arg(10000);

static void BM_EtaGram(benchmark::State& state) {
  auto pen = pencil_from_tdd(Rational(-9), Rational(-1), Rational(407, 20));
  for (auto _ : state) benchmark::DoNotOptimize(eta_gram(pen));
}
BENCHMARK(BM_EtaGram);

static void BM_CanonicalMatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler_match_verify_canonical(-4, 13, Branch::plus));
}
BENCHMARK(BM_CanonicalMatch);

static void BM_BasepointSolve(benchmark::State& state) {
  PencilParams q{Rational(-9), Rational(-1), Rational(407, 20)};
  for (auto _ : state) benchmark::DoNotOptimize(basepoint_solve(q, 5, 13, Branch::plus));
}
BENCHMARK(BM_BasepointSolve);

static void BM_ExactMatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler_match_exact_canonical(-4, 13, Branch::plus));
}
BENCHMARK(BM_ExactMatch);

static void BM_Universality(benchmark::State& state) {
  auto d = Dispersion::parse(state.range(0) == 0 ? "tanh" : "algebraic");
  for (auto _ : state) benchmark::DoNotOptimize(universality_integral(d, Cx(1.1, 0.0)));
}
BENCHMARK(BM_Universality)->Arg(0)->Arg(1);

static void BM_LSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_L_chi4(0.3));
}
BENCHMARK(BM_LSeries);

static void BM_DeltaSeries(benchmark::State& state) {
  auto curve = WeierstrassCurve::from_model({0, 0, 0, 8, 0});
  for (auto _ : state) benchmark::DoNotOptimize(delta_p_series(curve, 10000, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_DeltaSeries)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
