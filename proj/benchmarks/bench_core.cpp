#include <benchmark/benchmark.h>

#include "ccc/gl2.hpp"
#include "ccc/groupspec.hpp"
#include "ccc/matching.hpp"
#include "ccc/partitions.hpp"

using namespace ccc;

static void BM_CloseSym6(benchmark::State& state) {
  auto gens = sym_generators(6);
  for (auto _ : state) {
    FiniteGroup g = FiniteGroup::close(gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_CloseSym6);

static void BM_ConjugacyClassesSym7(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::close(sym_generators(7));
  for (auto _ : state) {
    ClassSet cs = conjugacy_classes(g);
    benchmark::DoNotOptimize(cs.count());
  }
}
BENCHMARK(BM_ConjugacyClassesSym7);

static void BM_CommutingRelationGl2q5(benchmark::State& state) {
  FiniteGroup g = gl2_group(5);
  ClassSet cs = conjugacy_classes(g);
  for (auto _ : state) {
    ClassRelation rel = ClassRelation::commuting(g, cs);
    benchmark::DoNotOptimize(rel.count());
  }
}
BENCHMARK(BM_CommutingRelationGl2q5);

static void BM_Theorem1Sym6(benchmark::State& state) {
  BuiltPair built = build_group(parse_group_spec("sym:6", "alt"));
  ClassSet cs = conjugacy_classes(*built.group);
  ClassRelation rel = ClassRelation::commuting(*built.group, cs);
  QuotientData q = cyclic_quotient(*built.group, built.h_members);
  for (auto _ : state) {
    ClassMatching m = theorem1_matching(*built.group, cs, rel, q, 0);
    benchmark::DoNotOptimize(m.pairs.size());
  }
}
BENCHMARK(BM_Theorem1Sym6);

static void BM_Partitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Partitions)->Arg(30)->Arg(45)->Arg(60);

static void BM_CoarseningRelation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto pairs = sym_bijection_f(n);
    benchmark::DoNotOptimize(pairs.size());
  }
}
BENCHMARK(BM_CoarseningRelation)->Arg(10)->Arg(14);

static void BM_HallAuditExhaustive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  BitMatrix adj(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((i + j) % 5 != 2) adj.set(i, j);
  for (auto _ : state) {
    HallAuditReport rep = hall_audit(adj);
    benchmark::DoNotOptimize(rep.subsets_audited);
  }
}
BENCHMARK(BM_HallAuditExhaustive)->Arg(12)->Arg(18);

static void BM_Gl4CyclicAlgebraScan(benchmark::State& state) {
  for (auto _ : state) {
    Gl4Report rep = gl4_counterexample();
    benchmark::DoNotOptimize(rep.z_scanned);
  }
}
BENCHMARK(BM_Gl4CyclicAlgebraScan);

BENCHMARK_MAIN();
