// Serial reference against OpenMP kernels, plus the whole-frame estimate.

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "vsde/estimator.hpp"
#include "vsde/kernels.hpp"

namespace {

using namespace vsde;

LumaFrame random_frame(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LumaFrame f(n, n);
  for (auto& v : f.samples()) v = static_cast<std::uint8_t>(rng() & 0xff);
  return f;
}

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

template <auto Kernel>
void bm_sobel(benchmark::State& state) {
  const auto frame = random_frame(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(frame));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frame.size()));
}

template <auto Kernel>
void bm_column_weighted_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto power = random_values(static_cast<std::size_t>(n) * n, 2);
  const auto weight = random_values(static_cast<std::size_t>(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(power, n, n, weight));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(power.size()));
}

template <auto Kernel>
void bm_sum_squared_difference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_frame(n, 4), b = random_frame(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a.samples(), b.samples()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <auto Kernel>
void bm_taylor_sums(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto gx = random_values(n * n, 6), curv = random_values(n * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(gx, curv));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gx.size()));
}

void bm_estimate_frame(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = random_frame(n, 8), t_hat = random_frame(n, 9);
  LumaFrame d(n, n, 0), d_hat(n, n, 0);
  for (int y = 0; y < n; ++y)
    for (int x = n / 3; x < 2 * n / 3; ++x) d(x, y) = d_hat(x, y) = 120;
  d_hat(n / 2, n / 2) = 121;
  const CameraConfig cam{300.0, 0.0, 4.0, 2.0, 6.0, 1e4};
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_frame(t, d, t, d, t_hat, d_hat, t_hat, d_hat, cam));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n);
}

#define VSDE_KERNEL_PAIR(bm, kernel)                                                  \
  BENCHMARK(bm<kernels::serial::kernel>)->Name(#kernel "/serial")->RangeMultiplier(4)->Range(256, 4096); \
  BENCHMARK(bm<kernels::parallel::kernel>)->Name(#kernel "/parallel")->RangeMultiplier(4)->Range(256, 4096)

VSDE_KERNEL_PAIR(bm_sobel, sobel);
VSDE_KERNEL_PAIR(bm_column_weighted_sum, column_weighted_sum);
VSDE_KERNEL_PAIR(bm_sum_squared_difference, sum_squared_difference);
VSDE_KERNEL_PAIR(bm_taylor_sums, taylor_sums);
BENCHMARK(bm_estimate_frame)->RangeMultiplier(2)->Range(256, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
