#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "lpa/multiplier.hpp"
#include "lpa/orthogonality.hpp"

namespace {

lpa::CoeffSeq random_seq(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<lpa::Complex> c(n);
  for (auto& x : c) x = {d(rng), d(rng)};
  return lpa::CoeffSeq(std::move(c));
}

void bm_apply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto phi = random_seq(8, 1);
  const auto f = random_seq(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lpa::apply(phi, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_apply)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void bm_bj_sum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lpa::Exponent p(3.0);
  const auto f = random_seq(n, 3);
  const auto g = random_seq(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lpa::bj_sum(f, g, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_bj_sum)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void bm_section(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lpa::Exponent p(1.5);
  const auto a = lpa::toeplitz_section(lpa::CoeffSeq{1.0, 1.0}, n);
  for (auto _ : state) benchmark::DoNotOptimize(lpa::section_pnorm_lower(a, p, 200, 1));
}
BENCHMARK(bm_section)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void bm_section_inner(benchmark::State& state) {
  const lpa::Exponent p(4.0);
  const auto b = lpa::single_zero_inner(0.5, p, 64);
  const auto a = lpa::toeplitz_section(b, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpa::section_pnorm_lower(a, p, 200, 1));
}
BENCHMARK(bm_section_inner)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
