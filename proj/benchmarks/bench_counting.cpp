#include <benchmark/benchmark.h>

#include "tpart/counting.hpp"
#include "tpart/text.hpp"

namespace {

const tpart::QuadInt& showcase() {
  static const tpart::QuadInt delta = tpart::parse_element("21+7*w@3");
  return delta;
}

void BM_Downset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpart::downset(showcase()));
}
BENCHMARK(BM_Downset);

void BM_CountPartitions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpart::count_partitions(showcase()));
}
BENCHMARK(BM_CountPartitions);

void BM_CountViaFactorization(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpart::count_via_factorization(showcase()));
}
BENCHMARK(BM_CountViaFactorization);

void BM_SylvesterIdentity(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tpart::verify_identity(showcase(), tpart::sylvester_pair(k)));
}
BENCHMARK(BM_SylvesterIdentity)->DenseRange(1, 4);

void BM_GordonB(benchmark::State& state) {
  const auto spec = tpart::ClassSpec::gordon(tpart::Side::B, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tpart::count_class(showcase(), spec));
}
BENCHMARK(BM_GordonB);

// Trace-bounded sweep in Q(sqrt 5), the shape of the property suites.
void BM_TraceSweep(benchmark::State& state) {
  const auto field = tpart::Field::make(5);
  const auto targets = tpart::elements_with_trace_at_most(field, state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& t : targets) total += tpart::count_partitions(t);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(targets.size()));
}
BENCHMARK(BM_TraceSweep)->Arg(10)->Arg(20);

}  // namespace
