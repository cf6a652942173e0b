#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ctm/bayes_kelly.hpp"
#include "ctm/conformal.hpp"
#include "ctm/experiments.hpp"
#include "oracles.hpp"

namespace {

using ctm::BayesKellyMartingale;
using ctm::MarkovParams;
using ctm::PValue;
using ctm::WeightTable;

MarkovParams random_params(ctm::RandomSource& rng) {
  return {0.05 + 0.9 * rng.uniform_open(), 0.05 + 0.9 * rng.uniform_open()};
}

// Runs the recursion over `p` and returns the table together with the
// product of normalizers from step 2 onwards.
std::pair<WeightTable, double> run_recursion(const MarkovParams& params,
                                             const std::vector<double>& p) {
  WeightTable w = ctm::bk_init();
  double evidence = 1.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    auto up = ctm::bk_update(w, params, PValue(p[i]));
    evidence *= up.normalizer;
    w = std::move(up.weights);
  }
  return {w, evidence};
}

TEST(BkInit, StartValues) {
  const WeightTable w = ctm::bk_init();
  EXPECT_EQ(w.n(), 1U);
  EXPECT_EQ(w.weight(0, 0), 0.5);
  EXPECT_EQ(w.weight(1, 1), 0.5);
  EXPECT_EQ(w.weight(0, 1), 0.0);
  EXPECT_EQ(w.weight(1, 0), 0.0);
  EXPECT_EQ(w.sum(), 1.0);
}

TEST(BkInit, PredictiveIntegratesToOne) {
  ctm::RandomSource rng(3);
  for (int i = 0; i < 20; ++i) {
    EXPECT_NEAR(ctm::bk_predictive(ctm::bk_init(), random_params(rng)).integral(), 1.0, 1e-12);
  }
}

TEST(BkLikelihood, DirectSubstitution) {
  EXPECT_DOUBLE_EQ(ctm::bk_likelihood(1, 0, 0, PValue(0.3)), 1.0);
  EXPECT_DOUBLE_EQ(ctm::bk_likelihood(1, 1, 0, PValue(0.3)), 0.0);
  EXPECT_DOUBLE_EQ(ctm::bk_likelihood(1, 0, 1, PValue(0.3)), 2.0);
  EXPECT_DOUBLE_EQ(ctm::bk_likelihood(1, 1, 1, PValue(0.3)), 1.0);
  EXPECT_DOUBLE_EQ(ctm::bk_likelihood(1, 0, 1, PValue(0.7)), 0.0);
  EXPECT_DOUBLE_EQ(ctm::bk_likelihood(3, 1, 0, PValue(0.25)), 4.0 / 3.0);
}

TEST(BkUpdate, HardCaseFirstUpdate) {
  const auto up = ctm::bk_update(ctm::bk_init(), MarkovParams::hard(), PValue(0.3));
  EXPECT_EQ(up.weights.n(), 2U);
  EXPECT_NEAR(up.weights.weight(0, 0), 0.3, 1e-15);
  EXPECT_NEAR(up.weights.weight(1, 1), 0.4, 1e-15);
  EXPECT_NEAR(up.weights.weight(2, 1), 0.3, 1e-15);
  EXPECT_EQ(up.weights.weight(1, 0), 0.0);
  EXPECT_EQ(up.weights.weight(0, 1), 0.0);
  EXPECT_EQ(up.weights.weight(2, 0), 0.0);
  EXPECT_NEAR(up.normalizer, 1.0, 1e-15);
}

TEST(BkUpdate, MatchesBruteForcePosterior) {
  ctm::RandomSource rng(2021);
  for (int fixture = 0; fixture < 100; ++fixture) {
    const MarkovParams params = random_params(rng);
    const std::size_t n = 1 + fixture % 8;
    std::vector<double> p(n);
    for (double& v : p) v = rng.uniform_open();
    const auto oracle = ctm::oracle::brute_force_posterior(params.pi_1_given_0(),
                                                           params.pi_1_given_1(), p);
    const auto [table, evidence] = run_recursion(params, p);
    ASSERT_EQ(table.n(), n);
    for (std::size_t k = 0; k <= n; ++k) {
      for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(table.weight(k, j), oracle.weights[k][static_cast<std::size_t>(j)], 1e-10)
            << "fixture " << fixture << " k " << k << " j " << j;
      }
    }
    // p_1 has density 1, so the normalizer product is the full evidence.
    EXPECT_NEAR(evidence, oracle.evidence, 1e-10 * std::max(1.0, oracle.evidence));
  }
}

TEST(BkUpdate, OutputSumsToOne) {
  ctm::RandomSource rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const MarkovParams params = random_params(rng);
    WeightTable w = ctm::bk_init();
    for (int step = 0; step < 200; ++step) {
      auto up = ctm::bk_update(w, params, PValue(rng.uniform_open()));
      ASSERT_NEAR(up.weights.sum(), 1.0, 1e-12);
      w = std::move(up.weights);
    }
  }
}

TEST(BkUpdate, EmptyTableIsZeroNormalizer) {
  EXPECT_THROW((void)ctm::bk_update(WeightTable(3), MarkovParams::hard(), PValue(0.5)),
               ctm::ZeroNormalizerError);
}

TEST(BkPredictive, SymmetricStartIsFlat) {
  const auto f = ctm::bk_predictive(ctm::bk_init(), MarkovParams::hard());
  EXPECT_NEAR(f(0.3), 1.0, 1e-15);
  EXPECT_NEAR(f(0.7), 1.0, 1e-15);
  // Both non-strict indicators are active at the shared breakpoint.
  EXPECT_NEAR(f(0.5), 1.4, 1e-15);
  EXPECT_NEAR(f.integral(), 1.0, 1e-15);
}

TEST(BkPredictive, IntegratesToOneForRandomTables) {
  ctm::RandomSource rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_open() * 300);
    WeightTable w(n);
    double total = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      for (int j = 0; j < 2; ++j) {
        const double u = rng.uniform_open();
        w.weight(k, j) = u * u * u;
        total += w.weight(k, j);
      }
    }
    for (std::size_t k = 0; k <= n; ++k) {
      for (int j = 0; j < 2; ++j) w.weight(k, j) /= total;
    }
    EXPECT_NEAR(ctm::bk_predictive(w, random_params(rng)).integral(), 1.0, 1e-9);
  }
}

TEST(BkPredictive, EqualsNormalizerAtObservedP) {
  ctm::RandomSource rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const MarkovParams params = random_params(rng);
    WeightTable w = ctm::bk_init();
    for (int step = 0; step < 300; ++step) {
      const PValue p(rng.uniform_open());
      const double f = ctm::bk_predictive(w, params)(p.value());
      auto up = ctm::bk_update(w, params, p);
      ASSERT_NEAR(f, up.normalizer, 1e-12 * std::max(1.0, f));
      w = std::move(up.weights);
    }
  }
}

// Evaluates the betting function straight from its definition as a sum
// over cells.
TEST(BkPredictive, MatchesDirectSum) {
  ctm::RandomSource rng(4);
  const MarkovParams params = random_params(rng);
  WeightTable w = ctm::bk_init();
  for (int step = 0; step < 30; ++step) w = ctm::bk_update(w, params, PValue(rng.uniform_open())).weights;
  const auto f = ctm::bk_predictive(w, params);
  const std::size_t n = w.n() + 1;
  for (int i = 0; i < 100; ++i) {
    const double p = rng.uniform_open();
    double direct = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      for (int j = 0; j < 2; ++j) {
        const double nk = static_cast<double>(n);
        const double kk = static_cast<double>(k);
        if (p <= (kk + 1) / nk) direct += w.weight(k, j) * nk / (kk + 1) * params.prob_one_after(j);
        if (p >= kk / nk) direct += w.weight(k, j) * nk / (nk - kk) * params.prob_zero_after(j);
      }
    }
    EXPECT_NEAR(f(p), direct, 1e-12);
  }
}

TEST(BayesKelly, FirstStepBetsOne) {
  BayesKellyMartingale bk(MarkovParams::easy());
  EXPECT_EQ(bk.step(PValue(0.01)), 1.0);
  EXPECT_EQ(bk.capital().log10_value(), 0.0);
}

TEST(BayesKelly, SecondStepHardCase) {
  BayesKellyMartingale bk(MarkovParams::hard());
  bk.step(PValue(0.9));
  EXPECT_NEAR(bk.step(PValue(0.3)), 1.0, 1e-15);
  EXPECT_NEAR(bk.capital().log10_value(), 0.0, 1e-15);
}

TEST(BayesKelly, MartingaleUnderBernoulliNulls) {
  for (const double pi : {0.3, 0.5, 0.7}) {
    const int runs = 20000;
    std::vector<double> finals;
    finals.reserve(runs);
    const ctm::RandomSource root(2021);
    for (int r = 0; r < runs; ++r) {
      auto data = root.substream(static_cast<std::uint64_t>(r), ctm::StreamPurpose::data);
      auto theta = root.substream(static_cast<std::uint64_t>(r), ctm::StreamPurpose::randomizer);
      const auto pv = ctm::p_value_stream(ctm::generate_bernoulli(pi, 20, data), theta);
      BayesKellyMartingale bk(MarkovParams::hard());
      for (const auto& p : pv) bk.step(p);
      finals.push_back(std::pow(10.0, bk.capital().log10_value()));
    }
    const auto est = ctm::oracle::mean_and_error(finals);
    EXPECT_LT(std::abs(est.mean - 1.0), 5.0 * est.standard_error) << "pi " << pi;
  }
}

TEST(BayesKelly, StepCostIsLinear) {
  BayesKellyMartingale bk(MarkovParams::hard());
  ctm::RandomSource rng(1);
  std::vector<std::uint64_t> cost;
  std::uint64_t before = 0;
  for (int n = 1; n <= 2000; ++n) {
    bk.step(PValue(rng.uniform_open()));
    cost.push_back(bk.cells_touched() - before);
    before = bk.cells_touched();
  }
  // Step n evaluates n + 1 or n + 2 live cells.
  for (std::size_t n = 2; n <= cost.size(); ++n) {
    ASSERT_GE(cost[n - 1], n);
    ASSERT_LE(cost[n - 1], n + 2);
  }
}

TEST(WeightSnapshot, InitAndNormalization) {
  const auto s = ctm::export_weight_snapshot(ctm::bk_init());
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0], (std::pair<std::size_t, double>{0, 0.5}));
  EXPECT_EQ(s[1], (std::pair<std::size_t, double>{1, 0.5}));

  BayesKellyMartingale bk(MarkovParams::hard());
  ctm::RandomSource rng(6);
  for (int i = 0; i < 100; ++i) bk.step(PValue(rng.uniform_open()));
  double total = 0.0;
  for (const auto& [k, w] : ctm::export_weight_snapshot(*bk.weights())) total += w;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(WeightSnapshot, MediumScenarioConcentratesNearHalf) {
  for (const auto& params : {MarkovParams::hard(), MarkovParams::easy()}) {
    const auto table = ctm::run_bk_weights(ctm::Scenario::markov(1000, params), 1000);
    const auto snap = ctm::export_weight_snapshot(table);
    std::size_t best = 0;
    for (std::size_t k = 0; k < snap.size(); ++k) {
      if (snap[k].second > snap[best].second) best = k;
    }
    EXPECT_GE(best, 400U);
    EXPECT_LE(best, 600U);
  }
}

}  // namespace
