#include <benchmark/benchmark.h>

#include <random>

#include "qsyl/qsyl.hpp"

using namespace qsyl;

namespace {

QuatMatrix random_matrix(Index m, Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<Quaternion> e(static_cast<size_t>(m * n));
  for (auto& q : e) q = {d(rng), d(rng), d(rng), d(rng)};
  return QuatMatrix::from_entries(m, n, e);
}

void BM_Pinv(benchmark::State& state) {
  const Index n = state.range(0);
  const QuatMatrix a = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pinv(a));
}
BENCHMARK(BM_Pinv)->RangeMultiplier(2)->Range(4, 64);

void BM_Rank(benchmark::State& state) {
  const Index n = state.range(0);
  const QuatMatrix a = random_matrix(n, n / 2, 2) * random_matrix(n / 2, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 64);

void BM_Product(benchmark::State& state) {
  const Index n = state.range(0);
  const QuatMatrix a = random_matrix(n, n, 4), b = random_matrix(n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Product)->RangeMultiplier(2)->Range(4, 64);

CoupledSystem square_system(Kind k, int size) {
  GenOptions opt;
  opt.max_dim = size;
  opt.vary_dims = false;
  return generate(k, opt, 7).sys;
}

void BM_Check(benchmark::State& state) {
  const Kind k = all_kinds[state.range(0)];
  const CoupledSystem sys = square_system(k, static_cast<int>(state.range(1)));
  state.SetLabel(to_string(k));
  for (auto _ : state) benchmark::DoNotOptimize(check(sys));
}
BENCHMARK(BM_Check)->ArgsProduct({benchmark::CreateDenseRange(0, 7, 1), {4, 8}});

void BM_Solve(benchmark::State& state) {
  const Kind k = all_kinds[state.range(0)];
  const CoupledSystem sys = square_system(k, static_cast<int>(state.range(1)));
  state.SetLabel(to_string(k));
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}
BENCHMARK(BM_Solve)->ArgsProduct({benchmark::CreateDenseRange(0, 7, 1), {4, 8}});

void BM_Oracle(benchmark::State& state) {
  const CoupledSystem sys = square_system(Kind::sys01, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_check(sys));
}
BENCHMARK(BM_Oracle)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
