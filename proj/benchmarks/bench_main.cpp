#include <benchmark/benchmark.h>

#include <tangentlie/tangentlie.hpp>

using namespace tangentlie;

namespace {

RandersStructure<Rational> catalog(CatalogId id, CatalogParams params = {}) { return build(id, params).payload; }

void BM_LeviCivitaExact(benchmark::State& state) {
  const auto m = catalog(CatalogId::nilpotent5).base();
  const auto u = m.algebra().basis_vector(0), v = m.algebra().basis_vector(1);
  for (auto _ : state) benchmark::DoNotOptimize(levi_civita(m, u, v));
}
BENCHMARK(BM_LeviCivitaExact);

void BM_LiftedConnectionCheckExact(benchmark::State& state) {
  const auto l = lift_algebra(catalog(CatalogId::case2, {{"nu", 2}}).base());
  for (auto _ : state) benchmark::DoNotOptimize(verify_prop31(l));
}
BENCHMARK(BM_LiftedConnectionCheckExact)->Unit(benchmark::kMillisecond);

void BM_LiftedConnectionCheckNilpotent5(benchmark::State& state) {
  const auto l = lift_algebra(catalog(CatalogId::nilpotent5).base());
  for (auto _ : state) benchmark::DoNotOptimize(verify_prop31(l));
}
BENCHMARK(BM_LiftedConnectionCheckNilpotent5)->Unit(benchmark::kMillisecond);

void BM_FlagCurvatureClosedForm(benchmark::State& state) {
  const auto f = catalog(CatalogId::case3, {{"p", Rational(1, 10)}}).convert<double>();
  const AlgVector<double> y{1, 0, 0}, u{0, 0, 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(flag_curvature_theorem(f, LiftTag::complete, PlaneCase::vv, y, u));
}
BENCHMARK(BM_FlagCurvatureClosedForm);

void BM_TheoremVerification(benchmark::State& state) {
  const auto f = catalog(CatalogId::case2, {{"p", Rational(3, 10)}}).convert<double>();
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_theorems_35_36(f, static_cast<std::size_t>(state.range(0)), 0, std::nullopt));
}
BENCHMARK(BM_TheoremVerification)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_CurvatureSignScan(benchmark::State& state) {
  const auto f = catalog(CatalogId::nilpotent5).convert<double>();
  for (auto _ : state)
    benchmark::DoNotOptimize(curvature_sign_scan(f, LiftTag::complete, static_cast<std::size_t>(state.range(0)), 0));
}
BENCHMARK(BM_CurvatureSignScan)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GeodesicSolver(benchmark::State& state) {
  const auto m = catalog(CatalogId::case2).base();
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_vectors(m));
}
BENCHMARK(BM_GeodesicSolver)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
