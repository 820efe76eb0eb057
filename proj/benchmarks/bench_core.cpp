#include <benchmark/benchmark.h>

#include "sfa/stats.hpp"

using namespace sfa;

static Natural random_natural(Rng& rng, unsigned bits) {
  return rng.below(Natural(1) << bits) | 1;
}

static void BM_ModPow(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  Rng rng(1);
  const Natural modulus = random_natural(rng, bits);
  const Natural base = rng.below(modulus);
  const Natural exp = random_natural(rng, bits);
  for (auto _ : state) {
    Natural r = mod_pow(base, exp, modulus);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ModPow)->Arg(32)->Arg(64)->Arg(256)->Arg(1024);

static void BM_Jacobi(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  Rng rng(2);
  const Natural n = random_natural(rng, bits);
  const Natural a = rng.below(n);
  for (auto _ : state) {
    int s = jacobi(a, n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Jacobi)->Arg(32)->Arg(64)->Arg(256)->Arg(1024);

static void BM_IsPrime(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  Rng rng(3);
  Natural candidate = random_natural(rng, bits);
  while (!is_prime(candidate)) candidate += 2;  // worst case: all rounds run
  for (auto _ : state) {
    bool p = is_prime(candidate);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_IsPrime)->Arg(32)->Arg(64);

static void BM_FactorizeSmall(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  Rng rng(4);
  const Natural n = random_natural(rng, bits);
  for (auto _ : state) {
    Factorization f = factorize_small(n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FactorizeSmall)->Arg(32)->Arg(48);

static void BM_OrderBruteforce(benchmark::State& state) {
  const Natural n = 4087;  // 61 * 67
  for (auto _ : state) {
    OrderRecord rec = order_bruteforce(2, n);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_OrderBruteforce);

static void BM_OrderWithFactors(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  Rng rng(5);
  const Semiprime sp = gen_hard_semiprime(bits, rng);
  const Factorization f1 = factorize_small(sp.p1 - 1);
  const Factorization f2 = factorize_small(sp.p2 - 1);
  const Natural c = 2 + rng.below(sp.n - 2);
  for (auto _ : state) {
    OrderRecord rec = order_with_factors(c, sp, f1, f2);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_OrderWithFactors)->Arg(16)->Arg(32)->Arg(64);

static void BM_EnumerateReport(benchmark::State& state) {
  const Semiprime sp = make_semiprime(3, static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    EnumerationReport rep = enumerate_report(sp);
    benchmark::DoNotOptimize(rep);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateReport)->Arg(7)->Arg(331)->Arg(3331)->Complexity();

static void BM_MonteCarlo(benchmark::State& state) {
  Rng rng(6);
  const Semiprime sp = gen_hard_semiprime(64, rng);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    MonteCarloReport rep = monte_carlo_report(sp, samples, 1, 1);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_MonteCarlo)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
