#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include <satlab/arith.hpp>
#include <satlab/densities.hpp>
#include <satlab/fermat.hpp>
#include <satlab/prime_solver.hpp>

using namespace satlab;

// Inner loop of the seed-box scan: four quartic forms plus the gcd division.
static void FermatForms(benchmark::State& state) {
  const i64 side = state.range(0);
  i64 checksum = 0;
  for (auto _ : state) {
    for (i64 y1 = 1; y1 <= side; ++y1)
      for (i64 y2 = -side; y2 <= side; ++y2)
        for (i64 y3 = 1; y3 <= side; ++y3) {
          const auto f = fermat::f_forms({y1, y2, y3});
          checksum ^= f[0] + f[3];
        }
    benchmark::DoNotOptimize(checksum);
  }
  state.SetItemsProcessed(state.iterations() * side * (2 * side + 1) * side);
}
BENCHMARK(FermatForms)->Arg(8)->Arg(16)->Arg(32);

static void IntervalSieve(benchmark::State& state) {
  const u64 width = state.range(0);
  const u64 lo = 1'000'000'000'000ULL;
  for (auto _ : state) {
    auto primes = arith::primes_in_interval(lo, lo + width);
    benchmark::DoNotOptimize(primes);
  }
  state.SetItemsProcessed(state.iterations() * width);
}
BENCHMARK(IntervalSieve)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

static void PrimalityWord(benchmark::State& state) {
  u64 n = 1'000'000'000'039ULL;  // prime; step keeps the values odd
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::is_prime(n));
    n += 2;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(PrimalityWord);

// Local density of the form system at a single prime (p^2-cost recursion).
static void RhoPrime(benchmark::State& state) {
  const u64 p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(densities::rho_prime(p));
}
BENCHMARK(RhoPrime)->Arg(13)->Arg(61)->Arg(199);

// Meet-in-the-middle prime-quadruple solve, dominated by the pair tables.
static void SolveQuads(benchmark::State& state) {
  const u64 B = state.range(0);
  const solver::CayleyTarget t = solver::make_target({3, 3, 3, -1}, B);
  for (auto _ : state) {
    auto quads = solver::solve_prime_quads(t);
    benchmark::DoNotOptimize(quads);
  }
}
BENCHMARK(SolveQuads)->Arg(100'000'000)->Arg(10'000'000'000ULL);

static void SingularSeriesSum(benchmark::State& state) {
  const u64 P = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(solver::singular_series(P).sum_form);
}
BENCHMARK(SingularSeriesSum)->Arg(1'000)->Arg(10'000)->Arg(100'000);

BENCHMARK_MAIN();
