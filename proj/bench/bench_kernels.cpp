// Serial reference against the OpenMP kernels.  Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "glim/divalg.hpp"
#include "glim/groupring.hpp"
#include "glim/oracle.hpp"

using namespace glim;

namespace {

const std::vector<DivisionClass>& classes(int which) {
  static const std::vector<std::vector<DivisionClass>> cache{all_division_classes(FinAbGroup({2, 4})),
                                                             all_division_classes(FinAbGroup({4, 4}))};
  return cache[which];
}

std::vector<GroupRingElem> samples(const FinAbGroup& G, int n) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 5);
  std::vector<GroupRingElem> out;
  for (int i = 0; i < n; ++i) {
    GroupRingElem z(G);
    for (int g = 0; g < G.order(); ++g) z.set(g, d(rng));
    out.push_back(z);
  }
  return out;
}

void BM_validate_pairs_serial(benchmark::State& st) {
  const auto& cs = classes(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(validate_pairs_serial(cs));
  st.counters["pairs"] = static_cast<double>(cs.size() * cs.size());
}

void BM_validate_pairs(benchmark::State& st) {
  const auto& cs = classes(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(validate_pairs(cs));
  st.counters["pairs"] = static_cast<double>(cs.size() * cs.size());
}

void BM_proj_coords_batch_serial(benchmark::State& st) {
  const FinAbGroup G({4, 4});
  const auto zs = samples(G, static_cast<int>(st.range(0)));
  const auto S = all_orbits(G);
  for (auto _ : st) benchmark::DoNotOptimize(proj_coords_batch_serial(zs, S));
}

void BM_proj_coords_batch(benchmark::State& st) {
  const FinAbGroup G({4, 4});
  const auto zs = samples(G, static_cast<int>(st.range(0)));
  const auto S = all_orbits(G);
  for (auto _ : st) benchmark::DoNotOptimize(proj_coords_batch(zs, S));
}

}  // namespace

BENCHMARK(BM_validate_pairs_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validate_pairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_proj_coords_batch_serial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_proj_coords_batch)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
