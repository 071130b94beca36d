#include <gromon/assignment.hpp>
#include <gromon/distortion.hpp>
#include <gromon/euclidean.hpp>
#include <gromon/random.hpp>
#include <gromon/solvers.hpp>

#include <benchmark/benchmark.h>

using namespace gromon;

namespace {

void BM_Hungarian(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Rng rng(1);
  Matrix cost(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) cost(i, j) = rng.uniform();
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_assignment_min(cost));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_CouplingDistortion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
  const MeasureNetwork y(random_weights(n, rng), random_metric(n, rng));
  const Coupling pi = random_coupling(x.weights(), y.weights(), rng);
  const Exponent p = state.range(1) == 0 ? Exponent::infinity() : Exponent::finite(static_cast<double>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(distortion_p(x, y, pi, p));
}
BENCHMARK(BM_CouplingDistortion)->ArgsProduct({{8, 16, 32}, {0, 1, 2}});

void BM_VertexAscent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const MeasureNetwork x = MeasureNetwork::uniform(random_spd(n, rng));
  const MeasureNetwork y = MeasureNetwork::uniform(random_spd(n, rng));
  VertexAscentOptions opt;
  opt.restarts = 10;
  for (auto _ : state) benchmark::DoNotOptimize(gw_spd_vertex_ascent(x, y, opt).value);
}
BENCHMARK(BM_VertexAscent)->Arg(8)->Arg(16)->Arg(32);

void BM_FrankWolfe(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
  const MeasureNetwork y(random_weights(n, rng), random_metric(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(gw_frank_wolfe(x, y).value);
}
BENCHMARK(BM_FrankWolfe)->Arg(8)->Arg(16)->Arg(32);

void BM_Miso(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  const EuclideanCloud x = random_cloud(n, 3, rng), y = random_cloud(n, 3, rng);
  MisoOptions opt;
  opt.restarts = 10;
  for (auto _ : state) benchmark::DoNotOptimize(m_iso(x, y, Exponent::finite(2.0), opt).report.value);
}
BENCHMARK(BM_Miso)->Arg(16)->Arg(64);

void BM_GmExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(6);
  const MeasureNetwork x = MeasureNetwork::uniform(random_metric(n, rng));
  const MeasureNetwork y = MeasureNetwork::uniform(random_metric(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(gm_exact(x, y, Exponent::finite(2.0)).value);
}
BENCHMARK(BM_GmExact)->DenseRange(5, 8);

}  // namespace

BENCHMARK_MAIN();
