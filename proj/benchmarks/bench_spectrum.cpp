#include <benchmark/benchmark.h>

#include "sclab/graph.hpp"
#include "sclab/sampler.hpp"
#include "sclab/schedule.hpp"
#include "sclab/spectral.hpp"

using namespace sclab;

static void BM_Spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = sample(SampleSpec{n, ProbabilitySchedule::explicit_probs({0.5}, 1), 13});
  const auto g = Graph::from_skeleton(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(g).lambda2);
  }
}
BENCHMARK(BM_Spectrum)->Arg(32)->Arg(64)->Arg(128);

static void BM_GarlandCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = sample(SampleSpec{n, ProbabilitySchedule::power_law({0.2, 0.1}, 2), 21});
  for (auto _ : state) {
    benchmark::DoNotOptimize(garland_certificate(x, 2).certified);
  }
}
BENCHMARK(BM_GarlandCertificate)->Arg(30)->Arg(50);
