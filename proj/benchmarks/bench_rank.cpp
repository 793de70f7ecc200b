#include <benchmark/benchmark.h>

#include "sclab/betti.hpp"
#include "sclab/boundary.hpp"
#include "sclab/rank.hpp"
#include "sclab/sampler.hpp"
#include "sclab/schedule.hpp"

using namespace sclab;

namespace {

SignedSparseMatrix middle_boundary(int n) {
  const auto x = sample(SampleSpec{n, ProbabilitySchedule::explicit_probs({0.4, 0.4}, 2), 7});
  return boundary_matrix(x, 2);
}

}  // namespace

static void BM_RankExact(benchmark::State& state) {
  const auto m = middle_boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_exact(m));
  }
  state.SetLabel(std::to_string(m.rows) + "x" + std::to_string(m.cols));
}
BENCHMARK(BM_RankExact)->Arg(20)->Arg(30)->Arg(40);

static void BM_RankModPrime(benchmark::State& state) {
  const auto m = middle_boundary(static_cast<int>(state.range(0)));
  const std::uint64_t p = derive_rank_prime(42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_mod_prime(m, p));
  }
  state.SetLabel(std::to_string(m.rows) + "x" + std::to_string(m.cols));
}
BENCHMARK(BM_RankModPrime)->Arg(20)->Arg(30)->Arg(40)->Arg(60);

static void BM_BettiAuto(benchmark::State& state) {
  const auto x = sample(SampleSpec{static_cast<int>(state.range(0)),
                                   ProbabilitySchedule::explicit_probs({0.4, 0.4}, 2), 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti(x).betti);
  }
}
BENCHMARK(BM_BettiAuto)->Arg(20)->Arg(30)->Arg(40);
