#include <benchmark/benchmark.h>

#include <random>

#include "elemgs/corpus.hpp"
#include "elemgs/matrix.hpp"
#include "elemgs/resolution.hpp"
#include "elemgs/serre.hpp"

using namespace elemgs;

static void BM_Rank(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  auto f = FiniteField::prime(3);
  std::mt19937_64 rng(1);
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Elem(rng() % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(32)->Arg(128)->Arg(256);

static void BM_ResolutionOfK(benchmark::State& state) {
  const auto len = std::size_t(state.range(0));
  auto k = trivial_module(3, 2, FiniteField::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(k, len).betti);
}
BENCHMARK(BM_ResolutionOfK)->Arg(2)->Arg(4)->Arg(6);

static void BM_AgreementCorpus(benchmark::State& state) {
  auto corpus = random_corpus(50, 0);
  for (auto _ : state) benchmark::DoNotOptimize(run_agreement_suite(corpus, 2, 1));
}
BENCHMARK(BM_AgreementCorpus)->Unit(benchmark::kMillisecond);

static void BM_SteenrodClosure(benchmark::State& state) {
  auto ctx = make_context(3, 2, 1);
  auto u = parse_element(ctx, "l1*l2 + l2*y1 + x1");
  const unsigned cap = unsigned(state.range(0));
  for (auto _ : state) {
    GradedIdealSpan ideal(ctx, {u}, cap);
    benchmark::DoNotOptimize(ideal.dimension(cap));
  }
}
BENCHMARK(BM_SteenrodClosure)->Arg(12)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
