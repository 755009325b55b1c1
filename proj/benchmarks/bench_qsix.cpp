#include <benchmark/benchmark.h>

#include "qsix/infotheory.hpp"
#include "qsix/lagrange_mesh.hpp"
#include "qsix/momentum.hpp"
#include "qsix/qes_exact.hpp"
#include "qsix/quadrature.hpp"
#include "qsix/scans.hpp"
#include "qsix/variational.hpp"
#include "qsix/wkb.hpp"

namespace {

qsix::ModelParams at(double lambda) {
  qsix::ModelParams p;
  p.lambda = lambda;
  return p;
}

void BM_VariationalSolve(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qsix::variational::solve(at(3.0), k, k));
}
BENCHMARK(BM_VariationalSolve)->Arg(6)->Arg(10)->Arg(11);

void BM_MeshSolve(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const qsix::MeshConfig cfg = qsix::MeshConfig::defaults_for(at(3.0), size);
  for (auto _ : state)
    benchmark::DoNotOptimize(qsix::lagrange_mesh::mesh_solve(at(3.0), cfg, 4));
}
BENCHMARK(BM_MeshSolve)->Arg(40)->Arg(80)->Arg(160);

void BM_SectorBuild(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qsix::qes_exact::build_sector(6.0));
}
BENCHMARK(BM_SectorBuild);

void BM_TransformQuadrature(benchmark::State& state) {
  const auto s = qsix::variational::solve(at(3.0));
  const auto pgrid = qsix::quadrature::uniform_grid(12.0, 0.01);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qsix::momentum::transform_quadrature(s.states[0], pgrid));
}
BENCHMARK(BM_TransformQuadrature);

void BM_TransformSeriesPoint(benchmark::State& state) {
  const auto s = qsix::variational::solve(at(3.0));
  std::vector<double> scaled(s.states[0].coefficients);
  for (double& c : scaled)
    c *= s.states[0].norm_constant;
  double p = 0.0;
  for (auto _ : state) {
    p = p >= 6.0 ? 0.0 : p + 0.1;
    benchmark::DoNotOptimize(
        qsix::momentum::transform_series(qsix::Parity::Even, scaled, p));
  }
}
BENCHMARK(BM_TransformSeriesPoint);

void BM_DivergencePair(benchmark::State& state) {
  const auto s = qsix::variational::solve(at(2.0));
  const auto grid = qsix::quadrature::uniform_grid(6.5, 1.0 / 512.0);
  const auto r0 = qsix::variational::evaluate_wavefunction(s.states[0], grid);
  const auto r1 = qsix::variational::evaluate_wavefunction(s.states[1], grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsix::infotheory::kl_divergence(r1, r0));
    benchmark::DoNotOptimize(qsix::infotheory::crj_divergence(r0, r1));
  }
}
BENCHMARK(BM_DivergencePair);

void BM_CriticalCoupling(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qsix::scans::find_critical(0, 0.5, 1.0));
}
BENCHMARK(BM_CriticalCoupling);

void BM_WkbQuantize(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qsix::wkb::quantize(0, 100.0, qsix::ActionOrder::FullPotential));
}
BENCHMARK(BM_WkbQuantize);

} // namespace

BENCHMARK_MAIN();
