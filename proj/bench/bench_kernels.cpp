#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hardy/kernels.hpp"

using namespace hardy::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) {
    const double re = u(rng);
    x = {re, u(rng)};
  }
  return v;
}

template <cplx (*Dot)(std::span<const cplx>, std::span<const cplx>)>
void bm_dot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n, 1), b = random_vec(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Dot(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <void (*Multi)(std::span<const std::span<const cplx>>, std::span<const cplx>, std::span<cplx>)>
void bm_multi_dot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<cplx>> store;
  for (int j = 0; j < 40; ++j) store.push_back(random_vec(n, 10 + j));
  const std::vector<std::span<const cplx>> cols(store.begin(), store.end());
  const auto v = random_vec(n, 3);
  std::vector<cplx> out(cols.size());
  for (auto _ : state) {
    Multi(cols, v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * cols.size()));
}

template <void (*Matvec)(MatrixView, std::span<const cplx>, std::span<cplx>)>
void bm_matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_vec(n * n, 4);
  const auto x = random_vec(n, 5);
  std::vector<cplx> y(n);
  for (auto _ : state) {
    Matvec({m, n, n}, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

}  // namespace

BENCHMARK(bm_dot<serial::dot>)->Name("dot/serial")->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(bm_dot<parallel::dot>)->Name("dot/parallel")->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(bm_multi_dot<serial::multi_dot>)->Name("multi_dot/serial")->Arg(1 << 16);
BENCHMARK(bm_multi_dot<parallel::multi_dot>)->Name("multi_dot/parallel")->Arg(1 << 16);
BENCHMARK(bm_matvec<serial::matvec>)->Name("matvec/serial")->Arg(64)->Arg(512)->Arg(2048);
BENCHMARK(bm_matvec<parallel::matvec>)->Name("matvec/parallel")->Arg(64)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
