#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ctm/bayes_kelly.hpp"
#include "ctm/conformal.hpp"
#include "ctm/experiments.hpp"

namespace {

using ctm::MarkovParams;
using ctm::ProcessKind;
using ctm::Scenario;

double fraction_of_ones(const ctm::Bits& bits) {
  return static_cast<double>(std::accumulate(bits.begin(), bits.end(), 0)) /
         static_cast<double>(bits.size());
}

TEST(GenerateMarkov, EasyCaseFrequencies) {
  ctm::RandomSource rng(2021);
  const ctm::Bits bits = ctm::generate_markov(MarkovParams::easy(), 10000, rng);
  ASSERT_EQ(bits.size(), 10000U);
  EXPECT_GE(fraction_of_ones(bits), 0.45);
  EXPECT_LE(fraction_of_ones(bits), 0.55);
  double after_one = 0;
  double one_one = 0;
  for (std::size_t i = 1; i < bits.size(); ++i) {
    if (bits[i - 1]) {
      ++after_one;
      one_one += bits[i];
    }
  }
  EXPECT_GE(one_one / after_one, 0.87);
  EXPECT_LE(one_one / after_one, 0.93);
}

TEST(GenerateMarkov, EmptyAndOneVariatePerBit) {
  ctm::RandomSource rng(1);
  EXPECT_TRUE(ctm::generate_markov(MarkovParams::hard(), 0, rng).empty());
  ctm::RandomSource a(9);
  ctm::RandomSource b(9);
  (void)ctm::generate_markov(MarkovParams::hard(), 37, a);
  for (int i = 0; i < 37; ++i) (void)b.uniform_open();
  EXPECT_EQ(a.uniform_open(), b.uniform_open());
}

TEST(GenerateBernoulli, Edges) {
  ctm::RandomSource rng(3);
  const auto zeros = ctm::generate_bernoulli(0.0, 500, rng);
  const auto ones = ctm::generate_bernoulli(1.0, 500, rng);
  EXPECT_TRUE(std::all_of(zeros.begin(), zeros.end(), [](auto z) { return z == 0; }));
  EXPECT_TRUE(std::all_of(ones.begin(), ones.end(), [](auto z) { return z == 1; }));
  const auto fair = ctm::generate_bernoulli(0.5, 10000, rng);
  EXPECT_GE(fraction_of_ones(fair), 0.47);
  EXPECT_LE(fraction_of_ones(fair), 0.53);
  EXPECT_THROW((void)ctm::generate_bernoulli(1.5, 3, rng), std::invalid_argument);
}

TEST(ProcessNames, Parse) {
  EXPECT_EQ(ctm::parse_process_list("ub,lb,bk,sbk,sj,r"),
            (std::vector<ProcessKind>{ProcessKind::ub, ProcessKind::lb, ProcessKind::bk,
                                      ProcessKind::sbk, ProcessKind::sj, ProcessKind::r}));
  EXPECT_THROW((void)ctm::parse_process_list("ub,xx"), ctm::UnknownProcessError);
  EXPECT_THROW((void)ctm::parse_process_list(""), ctm::UnknownProcessError);
  const auto ids = ctm::process_ids(ctm::parse_process_list("bk,sj,bk"), {});
  EXPECT_EQ(ids, (std::vector<std::string>{"bk", "sj_0.0001", "sj_0.001", "sj_0.01", "sj_0.1"}));
}

TEST(RunSingle, BenchmarksOrderedPointwise) {
  for (const auto& params : {MarkovParams::hard(), MarkovParams::easy()}) {
    const auto run = ctm::run_single(Scenario::markov(1000, params), {ProcessKind::ub, ProcessKind::lb});
    ASSERT_EQ(run.trajectories.size(), 2U);
    const auto& ub = run.trajectories[0].values;
    const auto& lb = run.trajectories[1].values;
    ASSERT_EQ(ub.size(), 1000U);
    for (std::size_t i = 0; i < ub.size(); ++i) ASSERT_LE(lb[i], ub[i] + 1e-9);
  }
}

TEST(RunSingle, BkFiniteUnderNull) {
  Scenario s{100, MarkovParams::easy(), ctm::BernoulliLaw{0.5}, 2021};
  const auto run = ctm::run_single(s, {ProcessKind::bk});
  for (const double v : run.trajectories[0].values) ASSERT_TRUE(std::isfinite(v));
}

TEST(RunSingle, SharedStreams) {
  const Scenario s = Scenario::markov(300, MarkovParams::hard(), 5);
  const auto run = ctm::run_single(s, ctm::parse_process_list("ub,bk,sbk,sj,r"), {}, 4);
  const ctm::RandomSource root(5);
  auto data = root.substream(4, ctm::StreamPurpose::data);
  auto theta = root.substream(4, ctm::StreamPurpose::randomizer);
  const ctm::Bits bits = ctm::generate_markov(MarkovParams::hard(), 300, data);
  EXPECT_EQ(run.data_digest, ctm::digest_bits(bits));
  EXPECT_EQ(run.pvalue_digest, ctm::digest_pvalues(ctm::p_value_stream(bits, theta)));
  EXPECT_EQ(run.trajectories.size(), 8U);
}

TEST(RunSingle, Deterministic) {
  const Scenario s = Scenario::markov(500, MarkovParams::easy());
  const auto procs = ctm::parse_process_list("ub,lb,bk,sbk,sj,r");
  const auto a = ctm::run_single(s, procs);
  const auto b = ctm::run_single(s, procs);
  ASSERT_EQ(a.trajectories.size(), b.trajectories.size());
  for (std::size_t i = 0; i < a.trajectories.size(); ++i) {
    EXPECT_EQ(a.trajectories[i].values, b.trajectories[i].values);
  }
}

TEST(RunSingle, FinalsOnlyMatchesFullPath) {
  const Scenario s = Scenario::markov(200, MarkovParams::hard());
  ctm::RunOptions lean;
  lean.record_trajectories = false;
  const auto full = ctm::run_single(s, ctm::parse_process_list("ub,lb,bk,sbk,r"));
  const auto finals = ctm::run_single(s, ctm::parse_process_list("ub,lb,bk,sbk,r"), lean);
  for (std::size_t i = 0; i < full.trajectories.size(); ++i) {
    EXPECT_TRUE(finals.trajectories[i].values.empty());
    EXPECT_EQ(finals.trajectories[i].final_value, full.trajectories[i].values.back());
  }
}

TEST(RunMany, SingleRunEqualsRunSingle) {
  const Scenario s = Scenario::markov(300, MarkovParams::easy());
  const auto procs = ctm::parse_process_list("ub,lb,bk,sbk");
  const auto sweep = ctm::run_many(s, 1, procs);
  const auto run = ctm::run_single(s, procs);
  ASSERT_EQ(sweep.process_ids.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(sweep.finals[i][0], run.trajectories[i].final_value);
  }
}

TEST(RunMany, IndependentOfThreadCount) {
  const Scenario s = Scenario::markov(100, MarkovParams::hard());
  const auto procs = ctm::parse_process_list("ub,bk,sj");
  const auto one = ctm::run_many(s, 40, procs, {}, 1);
  const auto four = ctm::run_many(s, 40, procs, {}, 4);
  EXPECT_EQ(one.finals, four.finals);
  // Run r of the sweep is run_single with run index r.
  const auto run7 = ctm::run_single(s, procs, {}, 7);
  for (std::size_t i = 0; i < one.process_ids.size(); ++i) {
    EXPECT_EQ(one.finals[i][7], run7.trajectories[i].final_value);
  }
}

TEST(RunMany, RejectsZeroRuns) {
  EXPECT_THROW((void)ctm::run_many(Scenario::markov(10, MarkovParams::hard()), 0, {ProcessKind::ub}),
               std::invalid_argument);
}

TEST(RunBkWeights, StepOneIsStartTable) {
  const auto w = ctm::run_bk_weights(Scenario::markov(50, MarkovParams::hard()), 1);
  EXPECT_EQ(w.n(), 1U);
  EXPECT_EQ(w.weight(0, 0), 0.5);
  EXPECT_THROW((void)ctm::run_bk_weights(Scenario::markov(50, MarkovParams::hard()), 51),
               std::invalid_argument);
}

}  // namespace
