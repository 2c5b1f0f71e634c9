#include <benchmark/benchmark.h>

#include "kfc/concordance.hpp"
#include "kfc/invariants.hpp"
#include "kfc/knots.hpp"
#include "kfc/region.hpp"

namespace {

kfc::CfkComplex torus(int p, int q) { return kfc::class_complex(kfc::parse_knot("T(" + std::to_string(p) + "," + std::to_string(q) + ")")).complex; }

void BM_TensorReduce(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto a = kfc::class_complex(kfc::parse_knot("C(T(2,3);" + std::to_string(p) + "," + std::to_string(p + 1) + ")")).complex;
  const auto b = kfc::dual(torus(p, p + 1));
  for (auto _ : state) benchmark::DoNotOptimize(kfc::reduce(kfc::tensor(a, b)));
  state.SetLabel("p=" + std::to_string(p));
}
BENCHMARK(BM_TensorReduce)->DenseRange(2, 4);

void BM_RegionHomology(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto c = torus(p, p + 1);
  const int t = kfc::tau(c);
  const auto region = kfc::Region::full_hook(t);
  for (auto _ : state) {
    const auto rc = kfc::region_complex(c, region);
    benchmark::DoNotOptimize(kfc::homology_data(rc).rank());
  }
}
BENCHMARK(BM_RegionHomology)->DenseRange(3, 7, 2);

void BM_Epsilon(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto c = kfc::class_complex(kfc::parse_knot("C(D;" + std::to_string(p) + "," + std::to_string(p + 1) + ") + -T(" +
                                                    std::to_string(p) + "," + std::to_string(p + 1) + ")"))
                     .complex;
  for (auto _ : state) benchmark::DoNotOptimize(kfc::epsilon(c));
}
BENCHMARK(BM_Epsilon)->DenseRange(2, 4);

void BM_AInvariants(benchmark::State& state) {
  const auto c = torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kfc::a1(c));
    benchmark::DoNotOptimize(kfc::a2(c));
  }
}
BENCHMARK(BM_AInvariants)->DenseRange(3, 7, 2);

}  // namespace
BENCHMARK_MAIN();
