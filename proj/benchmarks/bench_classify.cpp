#include <benchmark/benchmark.h>

#include "affconj/affconj.hpp"

using namespace affconj;

namespace {

std::vector<AffineOperator> sample(std::size_t n, std::size_t count) {
  std::vector<AffineOperator> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_affine_operator(GenConfig{n, 3, derive_seed(n, i), 0.5}));
  return out;
}

void BM_Classify(benchmark::State& state) {
  const auto ops = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(ops[i++ % ops.size()]));
}
BENCHMARK(BM_Classify)->DenseRange(2, 8, 2);

void BM_Smith(benchmark::State& state) {
  const auto ops = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariant_factors(ops[i++ % ops.size()].matrix()));
}
BENCHMARK(BM_Smith)->DenseRange(2, 8, 2);

void BM_MinorsGcd(benchmark::State& state) {
  const auto ops = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minors_gcd_invariant_factors(ops[i++ % ops.size()].matrix()));
}
BENCHMARK(BM_MinorsGcd)->DenseRange(2, 4, 1);

void BM_CharPoly(benchmark::State& state) {
  const auto ops = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(ops[i++ % ops.size()].matrix()));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 10, 2);

void BM_CanonicalForm(benchmark::State& state) {
  const auto ops = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(ops[i++ % ops.size()]));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(2, 6, 2);

void BM_InvarianceSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_invariance_suite(50, GenConfig{6, 3, 42, 0.5}));
}
BENCHMARK(BM_InvarianceSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
