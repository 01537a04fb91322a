#include <benchmark/benchmark.h>

#include "chebvar/bipoly.hpp"
#include "chebvar/chebyshev.hpp"
#include "chebvar/twist.hpp"

using namespace chebvar;

static void BM_UniMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UniPoly& a = cheb_s(n);
  const UniPoly& b = cheb_s(n + 7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_UniMul)->Arg(16)->Arg(100)->Arg(400);

static void BM_BiMulSt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChebyshevSeq st(twist::t_poly(), n);
  for (auto _ : state) benchmark::DoNotOptimize(st[n] * st[n - 1]);
}
BENCHMARK(BM_BiMulSt)->Arg(10)->Arg(30)->Arg(50);

static void BM_PullBackF(benchmark::State& state) {
  const BiPoly x = twist::x_m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twist::pull_back_f(x));
}
BENCHMARK(BM_PullBackF)->Arg(20)->Arg(60);

static void BM_ExactDiv(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BiPoly l = twist::l_n(n);
  const BiPoly prod = l * twist::l_prime_n(n);
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(prod, l));
}
BENCHMARK(BM_ExactDiv)->Arg(5)->Arg(15);

static void BM_UniGcd(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const UniPoly p = cheb_s(d) - cheb_s(d - 1);
  const UniPoly q = UniPoly(Var::z, {2, -1}) * cheb_s(d / 3) * cheb_s(d / 2);
  for (auto _ : state) benchmark::DoNotOptimize(uni_gcd(p, q));
}
BENCHMARK(BM_UniGcd)->Arg(50)->Arg(200)->Arg(500);
