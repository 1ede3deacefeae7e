#include <benchmark/benchmark.h>

#include "ix/algebra.hpp"
#include "ix/fixpoint.hpp"
#include "ix/random.hpp"
#include "ix/simulation.hpp"
#include "ix/topology.hpp"
#include "ixcli/laws.hpp"

using namespace ix;

namespace {

InteractionStructure structure(std::size_t n, std::uint64_t seed = 1) {
  Rng rng(seed);
  return random_structure(rng, numbered_space(n), RandomShape{n, n, 3, 3});
}

void BM_Cover(benchmark::State& state) {
  const InteractionStructure w = structure(static_cast<std::size_t>(state.range(0)));
  Rng rng(2);
  const Subset u = random_subset(rng, w.source(), 10);
  for (auto _ : state) benchmark::DoNotOptimize(cover(w, u));
}
BENCHMARK(BM_Cover)->RangeMultiplier(4)->Range(16, 4096);

void BM_Interior(benchmark::State& state) {
  const InteractionStructure w = structure(static_cast<std::size_t>(state.range(0)));
  Rng rng(3);
  const Subset v = random_subset(rng, w.source(), 90);
  for (auto _ : state) benchmark::DoNotOptimize(interior(w, v));
}
BENCHMARK(BM_Interior)->RangeMultiplier(4)->Range(16, 4096);

void BM_GreatestSim(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const InteractionStructure wh = structure(n, 4);
  const InteractionStructure wl = structure(n, 5);
  const auto kind = static_cast<SimKind>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(greatest_sim(wh, wl, kind));
}
BENCHMARK(BM_GreatestSim)->ArgsProduct({{4, 8, 16, 32}, {0, 3}});

void BM_Dual(benchmark::State& state) {
  const InteractionStructure w = structure(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(dual(w));
}
BENCHMARK(BM_Dual)->Arg(8)->Arg(64);

void BM_Localize(benchmark::State& state) {
  const InteractionStructure w = structure(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(localize_with_preorder(w, 0));
}
BENCHMARK(BM_Localize)->Arg(3)->Arg(5);

void BM_LawSuite(benchmark::State& state) {
  cli::LawOptions o;
  o.iterations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_random_laws(o));
}
BENCHMARK(BM_LawSuite)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
