#include <benchmark/benchmark.h>

#include "qkdsec/attacks.hpp"
#include "qkdsec/mub.hpp"
#include "qkdsec/security.hpp"
#include "qkdsec/sim.hpp"

using namespace qkdsec;

static void BM_BuildMubFamily(benchmark::State& state) {
  const PrimePowerDim dim = PrimePowerDim::of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MubFamily fam = build_mub_family(dim);
    benchmark::DoNotOptimize(fam);
  }
}
BENCHMARK(BM_BuildMubFamily)->Arg(2)->Arg(8)->Arg(16)->Arg(27)->Arg(31);

static void BM_OracleStats(benchmark::State& state) {
  const ClonerAsymmetry asym =
      ClonerAsymmetry::symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AttackStats s = oracle_stats(asym);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_OracleStats)->Arg(2)->Arg(5)->Arg(7);

static void BM_IncoherentThreshold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ThresholdResult t = incoherent_threshold(n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_IncoherentThreshold)->Arg(2)->Arg(16);

static void BM_RunProtocol(benchmark::State& state) {
  ProtocolConfig cfg;
  cfg.dim = 2;
  cfg.bases = 3;
  cfg.n_symbols = static_cast<std::uint64_t>(state.range(0));
  cfg.attack = Cloner{ClonerAsymmetry::symmetric(2)};
  cfg.seed = 1;
  for (auto _ : state) {
    TranscriptStats stats = run_protocol(cfg);
    benchmark::DoNotOptimize(stats);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunProtocol)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
