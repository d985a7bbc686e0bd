#include <benchmark/benchmark.h>

#include "knot/cohom.hpp"
#include "knot/groupzoo.hpp"

namespace {

using namespace knot;

void BM_close_P3(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = build_P(3, 3);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_close_P3);

void BM_howell_random(benchmark::State& state) {
  std::uint64_t n = 216;
  std::size_t rows = static_cast<std::size_t>(state.range(0));
  std::size_t cols = rows * 2;
  ModMatrix m(n, cols);
  std::uint64_t seed = 12345;
  for (std::size_t i = 0; i < rows; ++i) {
    ModRow r(cols);
    for (auto& x : r) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      x = (seed >> 33) % n;
    }
    m.rows.push_back(std::move(r));
  }
  for (auto _ : state) {
    HowellBasis h = howell(m);
    benchmark::DoNotOptimize(h.rank());
  }
}
BENCHMARK(BM_howell_random)->Arg(16)->Arg(64);

void BM_sha_omega_heisenberg(benchmark::State& state) {
  PermGroup g = build_Pprime(2, 3);
  PermGroup h = build_H(2, 3);
  for (auto _ : state) {
    CohGroup sha = sha_omega(g, h);
    benchmark::DoNotOptimize(sha.invariants.order());
  }
}
BENCHMARK(BM_sha_omega_heisenberg);

void BM_sha_omega_order216(benchmark::State& state) {
  SemidirectStd sd = build_semidirect_std(
      3, {MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3)});
  for (auto _ : state) {
    CohGroup sha = sha_omega(sd.group, sd.stabilizer);
    benchmark::DoNotOptimize(sha.invariants.order());
  }
}
BENCHMARK(BM_sha_omega_order216);

}  // namespace

BENCHMARK_MAIN();
