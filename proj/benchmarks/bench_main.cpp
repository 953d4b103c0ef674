#include <benchmark/benchmark.h>

#include <random>

#include "taulab/classify.hpp"
#include "taulab/homological.hpp"
#include "taulab/matrix.hpp"

using namespace taulab;

namespace {

AlgebraPtr cyc334() {
  static AlgebraPtr a = build_nakayama(KupischSeries{{3, 3, 4}, true}, 1009);
  return a;
}

void BM_rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  Mat m(1009, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % 1009);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref)->Arg(32)->Arg(128);

void BM_build_algebra(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_nakayama(KupischSeries{{3, 3, 4}, true}, 1009));
  }
}
BENCHMARK(BM_build_algebra);

void BM_translate(benchmark::State& state) {
  auto a = cyc334();
  Rep m = serial_quotient(a, 0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ar_translate(m));
  }
}
BENCHMARK(BM_translate);

void BM_classify_module(benchmark::State& state) {
  auto a = cyc334();
  Rep m = serial_quotient(a, 1, 2);
  auto ig = try_ig_degree(a, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_module(m, "PJ(1,2)", 0, ig, 32));
  }
}
BENCHMARK(BM_classify_module);

void BM_hom_basis(benchmark::State& state) {
  auto a = cyc334();
  Rep m = regular_rep(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_basis(m, m));
  }
}
BENCHMARK(BM_hom_basis);

}  // namespace

BENCHMARK_MAIN();
