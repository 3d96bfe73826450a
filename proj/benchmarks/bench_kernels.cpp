#include <benchmark/benchmark.h>

#include "dgla/ce.hpp"
#include "dgla/enveloping.hpp"
#include "dgla/free_lie.hpp"

using namespace dgla;

static void BM_FreeLieBasis(benchmark::State& state) {
  int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FreeLiePresentation F({{"x", 1}, {"y", 1}}, w);
    benchmark::DoNotOptimize(F.dims());
  }
}
BENCHMARK(BM_FreeLieBasis)->Arg(3)->Arg(4)->Arg(5);

static void BM_PbwStraighten(benchmark::State& state) {
  EnvelopingAlgebra U(sl2(), static_cast<int>(state.range(0)));
  std::vector<int> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(2 - (i % 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(U.straighten(word, 1));
  }
}
BENCHMARK(BM_PbwStraighten)->Arg(3)->Arg(4)->Arg(5);

static void BM_CeHomologySl2(benchmark::State& state) {
  for (auto _ : state) {
    CEChainComplex ce(sl2(), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(homology_dims(ce.complex()));
  }
}
BENCHMARK(BM_CeHomologySl2)->Arg(3)->Arg(4);

static void BM_RankBareiss(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SparseMatrix m(n, n);
  unsigned long long x = 88172645463325252ull;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      int v = static_cast<int>(x % 7) - 3;
      if (v) m.set(i, j, v);
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rank());
  }
}
BENCHMARK(BM_RankBareiss)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
