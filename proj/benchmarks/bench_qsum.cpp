#include <benchmark/benchmark.h>

#include "tpart/qsum_builders.hpp"
#include "tpart/text.hpp"

namespace {

tpart::QSumRingPtr showcase_ring() {
  static const auto ring = tpart::QSum::Ring::make(tpart::parse_element("21+7*w@3"));
  return ring;
}

void BM_GordonProductSide(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpart::gordon_product_side(2, 2, showcase_ring()));
}
BENCHMARK(BM_GordonProductSide);

void BM_GordonSumProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpart::gordon_sum_product(3, 1, showcase_ring()));
}
BENCHMARK(BM_GordonSumProduct);

void BM_EulerLift(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpart::euler_lift(showcase_ring()));
}
BENCHMARK(BM_EulerLift);

void BM_Multiply(benchmark::State& state) {
  const auto ring = showcase_ring();
  const auto f = tpart::euler_product<tpart::QuadInt>(ring);
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_Multiply);

void BM_ClassicalCauchySum(benchmark::State& state) {
  const auto ring = tpart::ClassicalSeries::Ring::make(state.range(0), tpart::MarkerLayout({"a", "t"}, {5, 5}));
  for (auto _ : state) benchmark::DoNotOptimize(tpart::cauchy_sum(ring, tpart::CauchyNumerator::Full));
}
BENCHMARK(BM_ClassicalCauchySum)->Arg(15)->Arg(40);

}  // namespace
