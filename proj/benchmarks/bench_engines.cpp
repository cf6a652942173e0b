#include <benchmark/benchmark.h>

#include <vector>

#include "ctm/bayes_kelly.hpp"
#include "ctm/conformal.hpp"
#include "ctm/experiments.hpp"
#include "ctm/simple_jumper.hpp"
#include "ctm/simplified.hpp"

namespace {

std::vector<ctm::PValue> hard_case_pvalues(std::size_t n) {
  ctm::RandomSource root(2021);
  auto data = root.substream(0, ctm::StreamPurpose::data);
  auto theta = root.substream(0, ctm::StreamPurpose::randomizer);
  const ctm::Bits bits = ctm::generate_markov(ctm::MarkovParams::hard(), n, data);
  return ctm::p_value_stream(bits, theta);
}

// Whole Bayes-Kelly run; quadratic in the run length.
void bm_bayes_kelly_run(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pvalues = hard_case_pvalues(n);
  for (auto _ : state) {
    ctm::BayesKellyMartingale bk(ctm::MarkovParams::hard());
    for (const auto& p : pvalues) bk.step(p);
    benchmark::DoNotOptimize(bk.capital());
    state.counters["cells"] = static_cast<double>(bk.cells_touched());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_bayes_kelly_run)->RangeMultiplier(10)->Range(100, 10000)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);

void bm_simplified_run(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pvalues = hard_case_pvalues(n);
  for (auto _ : state) {
    ctm::SimplifiedBayesKellyMartingale sbk(ctm::MarkovParams::hard());
    for (const auto& p : pvalues) sbk.step(p);
    benchmark::DoNotOptimize(sbk.capital());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_simplified_run)->RangeMultiplier(10)->Range(100, 10000)->Complexity(benchmark::oN);

void bm_simple_jumper_run(benchmark::State& state) {
  const auto pvalues = hard_case_pvalues(10000);
  for (auto _ : state) {
    ctm::SimpleJumperMartingale sj(0.01);
    for (const auto& p : pvalues) sj.step(p);
    benchmark::DoNotOptimize(sj.capital());
  }
}
BENCHMARK(bm_simple_jumper_run);

void bm_run_single_medium(benchmark::State& state) {
  const auto scenario = ctm::Scenario::markov(1000, ctm::MarkovParams::easy());
  const auto processes = ctm::parse_process_list("ub,lb,r,bk,sbk,sj");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctm::run_single(scenario, processes));
  }
}
BENCHMARK(bm_run_single_medium)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
