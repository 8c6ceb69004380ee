// Serial reference vs OpenMP kernels. The second benchmark argument selects
// the execution mode: 0 = Serial, 1 = Parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "signpoly/kernels.hpp"
#include "signpoly/quantum.hpp"

using namespace signpoly;

namespace {

Execution mode(const benchmark::State& state) { return state.range(1) == 0 ? Execution::Serial : Execution::Parallel; }

std::vector<EuclideanPoint> random_points(std::size_t count, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<EuclideanPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(n);
    for (double& v : c) v = u(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

void BM_SignPermMemberBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto points = random_points(100'000, n, 1);
  const EuclideanPoint a = EuclideanPoint::axis(n, 0, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sign_perm_member_batch(points, a, kDefaultTol, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_SignPermMemberBatch)->ArgsProduct({{3, 8, 15}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_HullMemberBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto points = random_points(200, n, 2);
  const VertexSet v = enumerate_sign_perm_vertices(EuclideanPoint::axis(n, 0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hull_member_batch(points, v, kDefaultTol, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_HullMemberBatch)->ArgsProduct({{3, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MonteCarloVolume(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::monte_carlo_cross_polytope_volume(n, 1.0, 1'000'000, 3, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_MonteCarloVolume)->ArgsProduct({{3, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_WTypeEnumeration(benchmark::State& state) {
  ComplexVector amps = ComplexVector::Zero(8);
  amps[0] = Complex(0, 0.758);
  amps[2] = Complex(0.809, -0.588);
  amps[5] = Complex(0.809, 0.588);
  amps[7] = Complex(0.242, 0);
  const auto psi = PureState::normalize(amps).state;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_pure_sign_perms(psi, PureFilter::WType, kStateTol, kDefaultEnumerationCap, mode(state)));
  }
}
BENCHMARK(BM_WTypeEnumeration)->ArgsProduct({{8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
