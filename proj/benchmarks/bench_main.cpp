#include <benchmark/benchmark.h>

#include "rank3kit/analyzer.hpp"
#include "rank3kit/examples.hpp"
#include "rank3kit/linear_families.hpp"
#include "rank3kit/perm_group.hpp"
#include "rank3kit/structure.hpp"

namespace {

using namespace rank3kit;

PermGroup fresh_copy(const PermGroup &g) {
  // Rebuild from generators so each iteration pays for chain construction.
  return PermGroup(g.degree(), g.generators());
}

void bm_chain_construction(benchmark::State &state) {
  PermGroup base = build_example_6_3(3).group;
  for (auto _ : state) {
    PermGroup g = fresh_copy(base);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bm_chain_construction);

void bm_rank(benchmark::State &state) {
  PermGroup base = build_example_6_3(3).group;
  for (auto _ : state) {
    PermGroup g = fresh_copy(base);
    benchmark::DoNotOptimize(g.rank());
  }
}
BENCHMARK(bm_rank);

void bm_delta_action(benchmark::State &state) {
  FamilySpec spec = parse_family_spec("d=3,q=4,r=3,gens=full");
  for (auto _ : state) {
    PermGroup g = delta_action(spec);
    benchmark::DoNotOptimize(g.degree());
  }
}
BENCHMARK(bm_delta_action);

void bm_semiprimitive(benchmark::State &state) {
  PermGroup g = build_example_6_1(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_semiprimitive(fresh_copy(g)));
}
BENCHMARK(bm_semiprimitive);

void bm_full_analysis(benchmark::State &state) {
  PermGroup base = delta_action(parse_family_spec("d=2,q=7,r=2,gens=full"));
  for (auto _ : state) {
    Rank3Report report = analyze(fresh_copy(base));
    benchmark::DoNotOptimize(report.rank);
  }
}
BENCHMARK(bm_full_analysis);

} // namespace

BENCHMARK_MAIN();
