#include <benchmark/benchmark.h>

#include "pealab/convert.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/law.hpp"
#include "pealab/presets.hpp"

using namespace pealab;

static void BM_PeaValidate(benchmark::State& state) {
  Pea chain = make_chain_pea(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Pea::from_table(chain.size(), chain.table(), 0, chain.size() - 1);
    benchmark::DoNotOptimize(r.ok());
  }
}
BENCHMARK(BM_PeaValidate)->Arg(8)->Arg(12)->Arg(16);

static void BM_PsaCheck(benchmark::State& state) {
  Psa s = lpea_to_psa(make_chain_pea(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto r = Psa::check(s.poset(), s.circ_table(), s.star_table(),
                        s.neg_table(), s.til_table());
    benchmark::DoNotOptimize(r.ok());
  }
}
BENCHMARK(BM_PsaCheck)->Arg(8)->Arg(10)->Arg(12);

static void BM_Enumerate(benchmark::State& state) {
  SearchOptions opts;
  opts.order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = enumerate_peas(opts);
    benchmark::DoNotOptimize(v.size());
  }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7);

static void BM_EnumerateWorkers(benchmark::State& state) {
  SearchOptions opts;
  opts.order = 7;
  opts.worker_count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = enumerate_peas(opts);
    benchmark::DoNotOptimize(v.size());
  }
}
BENCHMARK(BM_EnumerateWorkers)->Arg(1)->Arg(2)->Arg(4);

static void BM_CoreSuite(benchmark::State& state) {
  auto m = make_law_model(
      psa_to_dcilattice(lpea_to_psa(make_chain_pea(static_cast<int>(state.range(0))))));
  const auto& suite = builtin_suite("core");
  for (auto _ : state)
    for (const Law& l : suite) benchmark::DoNotOptimize(check_law(*m, l).holds);
}
BENCHMARK(BM_CoreSuite)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
