#include <benchmark/benchmark.h>

#include "chebvar/bridge.hpp"
#include "chebvar/oracle.hpp"

using namespace chebvar;

static void BM_PhiRecursive(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bridge::phi_recursive_p3(p));
}
BENCHMARK(BM_PhiRecursive)->Arg(101)->Arg(1001);

static void BM_Certificate(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bridge::check_phi_irreducible_p3(p));
}
BENCHMARK(BM_Certificate)->Arg(101)->Arg(1001);

static void BM_Oracle(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::defining_poly(p, 3, Coords::BridgeXZ));
}
BENCHMARK(BM_Oracle)->Arg(31)->Arg(61)->Arg(101);

static void BM_OracleDetEvery(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::defining_poly(p, 3, Coords::BridgeXZ, oracle::DetCheck::Every));
}
BENCHMARK(BM_OracleDetEvery)->Arg(31);
