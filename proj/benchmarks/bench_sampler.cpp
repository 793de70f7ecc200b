#include <benchmark/benchmark.h>

#include "sclab/sampler.hpp"
#include "sclab/schedule.hpp"

using namespace sclab;

static void BM_SampleTwoLevels(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SampleSpec spec{n, ProbabilitySchedule::explicit_probs({0.3, 0.3}, 2), 42};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SampleSpec s = spec;
    s.seed = seed++;
    auto x = sample(s);
    benchmark::DoNotOptimize(x.face_count(1));
  }
}
BENCHMARK(BM_SampleTwoLevels)->Arg(40)->Arg(80)->Arg(160);

static void BM_SampleCritical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SampleSpec spec{n, ProbabilitySchedule::critical(2, {0.5, 0.0}, {0.5, 0.0}, 0.0, 2), 42};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SampleSpec s = spec;
    s.seed = seed++;
    auto x = sample(s);
    benchmark::DoNotOptimize(x.count_free_faces(2));
  }
}
BENCHMARK(BM_SampleCritical)->Arg(50)->Arg(100)->Arg(200);
