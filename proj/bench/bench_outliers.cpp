// Serial reference loop against the OpenMP kernel, and the polynomial
// entailment path against the exhaustive search.

#include <benchmark/benchmark.h>

#include "dlout/oracles.hpp"
#include "dlout/outliers.hpp"
#include "dlout/semantics.hpp"

namespace {

dlout::DefaultTheory nu_theory(std::size_t letters, std::size_t tightness) {
  dlout::TheoryProfile profile;
  profile.fragment = dlout::FragmentTag::NU;
  profile.letters = letters;
  profile.rules = letters * 4 / 3;
  profile.tightness = tightness;
  profile.seed = 8;
  return dlout::random_theory(profile);
}

dlout::DetectorOptions options(int jobs) {
  dlout::DetectorOptions out;
  out.backend = dlout::Backend::fast;
  out.jobs = jobs;
  out.prune_by_influence = false;
  return out;
}

void BM_EnumerateStrong(benchmark::State& state, int jobs) {
  dlout::DefaultTheory theory = nu_theory(static_cast<std::size_t>(state.range(0)), 2);
  dlout::OutlierDetector detector(theory, options(jobs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detector.enumerate_strong(1));
  }
  state.SetComplexityN(state.range(0));
}

void BM_EnumerateGeneral(benchmark::State& state, int jobs) {
  dlout::DefaultTheory theory = nu_theory(static_cast<std::size_t>(state.range(0)), 1);
  dlout::OutlierDetector detector(theory, options(jobs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detector.enumerate_general(1, 2));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Entails(benchmark::State& state, dlout::Backend backend) {
  dlout::DefaultTheory theory = nu_theory(static_cast<std::size_t>(state.range(0)), 1);
  dlout::Reasoner reasoner(theory, backend);
  dlout::Facts facts = reasoner.compiled().facts();
  const auto letters = static_cast<dlout::LitCode>(reasoner.compiled().letter_count());
  for (auto _ : state) {
    for (dlout::LitCode q = 0; q < 2 * letters; ++q) {
      benchmark::DoNotOptimize(reasoner.entails(facts, q));
    }
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_EnumerateStrong, serial, 1)->RangeMultiplier(2)->Range(32, 256)->Complexity();
BENCHMARK_CAPTURE(BM_EnumerateStrong, parallel, 0)->RangeMultiplier(2)->Range(32, 256)->Complexity();
BENCHMARK_CAPTURE(BM_EnumerateGeneral, serial, 1)->RangeMultiplier(2)->Range(16, 64)->Complexity();
BENCHMARK_CAPTURE(BM_EnumerateGeneral, parallel, 0)->RangeMultiplier(2)->Range(16, 64)->Complexity();
BENCHMARK_CAPTURE(BM_Entails, fast, dlout::Backend::fast)->RangeMultiplier(2)->Range(4, 16);
BENCHMARK_CAPTURE(BM_Entails, exhaustive, dlout::Backend::exhaustive)->RangeMultiplier(2)->Range(4, 16);

BENCHMARK_MAIN();
