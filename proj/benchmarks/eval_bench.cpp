#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "polyeval/evaluators.hpp"
#include "polyeval/harness.hpp"
#include "polyeval/reference.hpp"

using namespace polyeval;

namespace {

ComplexScalar point(std::size_t N) {
  const double t = 2 * std::numbers::pi * 9 / static_cast<double>(N + 1);
  return {std::cos(t), -std::sin(t)};
}

void run(benchmark::State& state, Algo algo) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const Polynomial poly = generate_coefficients(CoefficientFamily::random(1), N);
  const ComplexScalar z = point(N);
  for (auto _ : state) {
    OpCounter ctr;
    benchmark::DoNotOptimize(evaluate(algo, poly, z, ctr).value);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (N + 1)));
}

void BM_Horner(benchmark::State& s) { run(s, Algo::horner); }
void BM_Goertzel(benchmark::State& s) { run(s, Algo::goertzel); }
void BM_PemaHorner(benchmark::State& s) { run(s, Algo::pema_horner); }
void BM_PemaGoertzel(benchmark::State& s) { run(s, Algo::pema_goertzel); }

void BM_Reference(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const Polynomial poly = generate_coefficients(CoefficientFamily::random(1), N);
  const ComplexScalar z = point(N);
  for (auto _ : state) benchmark::DoNotOptimize(reference_eval(poly, z));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (N + 1)));
}

}  // namespace

BENCHMARK(BM_Horner)->RangeMultiplier(16)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_Goertzel)->RangeMultiplier(16)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_PemaHorner)->RangeMultiplier(16)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_PemaGoertzel)->RangeMultiplier(16)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_Reference)->RangeMultiplier(16)->Range(1 << 10, 1 << 18);
BENCHMARK_MAIN();
