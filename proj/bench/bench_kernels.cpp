#include <benchmark/benchmark.h>

#include "ringcover/ideals.hpp"
#include "ringcover/kernels.hpp"
#include "ringcover/paperlab.hpp"

using namespace ringcover;
using namespace ringcover::kernels;

namespace {

// Arg 0 selects R(2,3) (729 elements), arg 1 selects R(3,2) (4096 elements).
const RingPresentation& ring_for(const benchmark::State& state) {
  static const RingPresentation r23 = build_Rnq(2, make_field(3, 1)).ring();
  static const RingPresentation r32 = build_Rnq(3, make_field(2, 1)).ring();
  return state.range(0) == 0 ? r23 : r32;
}

template <auto Fn>
void quasi_regular(benchmark::State& state) {
  const RingPresentation& r = ring_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(r));
}

template <auto Fn>
void cyclic(benchmark::State& state) {
  const RingPresentation& r = ring_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(r, Side::left));
}

template <auto Fn>
void membership(benchmark::State& state) {
  const RingPresentation& r = ring_for(state);
  std::vector<Subspace> spaces;
  for (const auto& m : maximal_ideals(r, Side::left)) spaces.push_back(m.subspace());
  for (auto _ : state) benchmark::DoNotOptimize(Fn(r, spaces));
}

}  // namespace

BENCHMARK(quasi_regular<serial::quasi_regular_mask>)->Name("serial/quasi_regular_mask")->Arg(0)->Arg(1);
BENCHMARK(quasi_regular<parallel::quasi_regular_mask>)->Name("parallel/quasi_regular_mask")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(cyclic<serial::cyclic_ideals>)->Name("serial/cyclic_ideals")->Arg(0)->Arg(1);
BENCHMARK(cyclic<parallel::cyclic_ideals>)->Name("parallel/cyclic_ideals")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(membership<serial::membership_bitsets>)->Name("serial/membership_bitsets")->Arg(0)->Arg(1);
BENCHMARK(membership<parallel::membership_bitsets>)->Name("parallel/membership_bitsets")->Arg(0)->Arg(1)->UseRealTime();

BENCHMARK_MAIN();
