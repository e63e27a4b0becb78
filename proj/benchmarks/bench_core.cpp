#include <benchmark/benchmark.h>

#include "ptwitness/criteria.hpp"
#include "ptwitness/state_spec.hpp"

namespace {

using namespace ptwitness;

void BM_EnumerateIndices(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indices(count));
}
BENCHMARK(BM_EnumerateIndices)->Arg(15)->Arg(126)->Arg(1001);

void BM_MultiplyDegree3(benchmark::State& state) {
  const auto p = NormalPolynomial::monomial({1, 1, 1, 0}) +
                 NormalPolynomial::monomial({0, 1, 0, 1}, Complex{0.5, 0.5}) +
                 NormalPolynomial::monomial({0, 0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(multiply(p, adjoint(p)));
}
BENCHMARK(BM_MultiplyDegree3);

void BM_BuildState(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const auto spec = StateSpec::tmsv_state(0.4, cutoff, cutoff);
  for (auto _ : state) benchmark::DoNotOptimize(build(spec));
}
BENCHMARK(BM_BuildState)->Arg(12)->Arg(16);

void BM_MomentMatrix15(benchmark::State& state) {
  const MomentTable t(build(StateSpec::tmsv_state(0.4, 12, 12)));
  const OperatorBasis basis = canonical_basis(15);
  for (auto _ : state) {
    // fresh table so entry evaluation (not just cache hits) is timed
    const MomentTable fresh(build(StateSpec::tmsv_state(0.4, 12, 12)));
    benchmark::DoNotOptimize(build_matrix(fresh, basis));
  }
  (void)t;
}
BENCHMARK(BM_MomentMatrix15);

void BM_HierarchyScan(benchmark::State& state) {
  const MomentTable t(build(StateSpec::tmsv_state(0.4, 12, 12)));
  for (auto _ : state) benchmark::DoNotOptimize(hierarchy_scan(t, 10, 1e-8));
}
BENCHMARK(BM_HierarchyScan);

void BM_PartialTransposeEig(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockState s = build(StateSpec::tmsv_state(0.4, cutoff, cutoff));
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(partial_transpose(s)));
}
BENCHMARK(BM_PartialTransposeEig)->Arg(12)->Arg(16);

void BM_MinorSearchDegree3(benchmark::State& state) {
  const MomentTable t(build(StateSpec::tmsv_state(0.4, 12, 12)));
  const auto pool = indices_up_to_degree(3);
  for (auto _ : state) benchmark::DoNotOptimize(principal_minor_search(t, pool, 4));
}
BENCHMARK(BM_MinorSearchDegree3);

}  // namespace

BENCHMARK_MAIN();
