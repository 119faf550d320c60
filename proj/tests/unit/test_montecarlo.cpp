#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "altbest/analytics.hpp"
#include "altbest/errors.hpp"
#include "altbest/montecarlo.hpp"
#include "oracles.hpp"

using namespace altbest;

TEST(MakeStats, RatesAndInterval) {
  const SimulationStats s = make_stats(600, 300, 100);
  EXPECT_EQ(s.trials, 1000u);
  EXPECT_DOUBLE_EQ(s.success_rate, 0.6);
  EXPECT_DOUBLE_EQ(s.failure_rate, 0.3);
  EXPECT_DOUBLE_EQ(s.no_stop_rate, 0.1);
  EXPECT_DOUBLE_EQ(s.std_err, std::sqrt(0.6 * 0.4 / 1000));
  EXPECT_DOUBLE_EQ(s.ci95_low, 0.6 - 1.96 * s.std_err);
  const SimulationStats all = make_stats(10, 0, 0);
  EXPECT_EQ(all.ci95_high, 1.0);
  EXPECT_EQ(all.std_err, 0.0);
}

TEST(Simulate, TwoSingletons) {
  const SimulationStats s = simulate({ClassCounts{1, 1}, 0.5, 1000000, 42, 1});
  EXPECT_NEAR(s.success_rate, 0.75, 4 * s.std_err);
  EXPECT_EQ(s.successes + s.failures + s.no_stops, s.trials);
  EXPECT_EQ(s.failures, 0u);
}

TEST(Simulate, NoStopRateIsThresholdToTheK) {
  const SimulationStats s = simulate({ClassCounts{50, 50}, 0.5, 200000, 3, 1});
  EXPECT_NEAR(s.no_stop_rate, 0.25, 4 * s.no_stop_std_err);
}

TEST(Simulate, MatchesIndependentMonteCarlo) {
  const std::vector<int> shape = {3, 2, 4};
  const double t = 0.45;
  const SimulationStats s = simulate({ClassCounts{3, 2, 4}, t, 200000, 9, 1});
  const auto [p, se] = oracle::monte_carlo_success(shape, t, 200000, 123);
  EXPECT_NEAR(s.success_rate, p, 4 * std::hypot(se, s.std_err));
  EXPECT_NEAR(s.success_rate, oracle::enumerate_success(shape, t), 4 * s.std_err);
}

TEST(Simulate, IdenticalAcrossWorkerCounts) {
  const SimulationConfig base{ClassCounts{4, 6}, 0.5, 50000, 77, 1};
  const SimulationStats one = simulate(base);
  for (unsigned w : {2u, 3u, 8u}) {
    SimulationConfig cfg = base;
    cfg.workers = w;
    EXPECT_EQ(simulate(cfg), one) << "workers=" << w;
  }
}

TEST(Simulate, EndpointsAreDeterministic) {
  const SimulationStats at_one = simulate({ClassCounts{3, 3}, 1.0, 1000, 1, 1});
  EXPECT_EQ(at_one.successes, 0u);
  EXPECT_EQ(at_one.no_stops, 1000u);
  const SimulationStats lone = simulate({ClassCounts{1}, 0.0, 1000, 1, 1});
  EXPECT_EQ(lone.successes, 1000u);
}

TEST(Simulate, RejectsZeroTrialsAndBadThreshold) {
  EXPECT_THROW(simulate({ClassCounts{1}, 0.5, 0, 1, 1}), DomainError);
  EXPECT_THROW(simulate({ClassCounts{1}, 1.5, 10, 1, 1}), DomainError);
}

TEST(Sweep, SingletonCurve) {
  const auto rows = sweep(ClassCounts{1, 1}, {1.0, 0.0, 0.5}, 200000, 4);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].first, 0.0);
  EXPECT_EQ(rows[1].first, 0.5);
  EXPECT_EQ(rows[2].first, 1.0);
  EXPECT_EQ(rows[0].second.success_rate, 1.0);
  EXPECT_NEAR(rows[1].second.success_rate, 0.75, 4 * rows[1].second.std_err);
  EXPECT_EQ(rows[2].second.success_rate, 0.0);
  EXPECT_EQ(rows[2].second.no_stop_rate, 1.0);
}

TEST(Sweep, SharesRealizationsWithSimulate) {
  const auto rows = sweep(ClassCounts{2, 3}, {0.3, 0.6}, 20000, 8);
  EXPECT_EQ(rows[0].second, simulate({ClassCounts{2, 3}, 0.3, 20000, 8, 1}));
  EXPECT_EQ(rows[1].second, simulate({ClassCounts{2, 3}, 0.6, 20000, 8, 1}));
}

TEST(Sweep, DominatesBoundAndAgreesWithExact) {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  const ClassCounts counts{20, 20};
  for (const auto& [t, s] : sweep(counts, grid, 100000, 12, 2)) {
    const double exact = exact_success_prob(counts, t).value;
    EXPECT_GE(s.success_rate, lower_bound_h(2, t) - 4 * s.std_err) << "t=" << t;
    EXPECT_NEAR(s.success_rate, exact, 4 * s.std_err + 1e-12) << "t=" << t;
  }
}

TEST(Sweep, NoStopIsMonotoneAlongTheGrid) {
  const auto rows = sweep(ClassCounts{3, 4}, {0.1, 0.3, 0.5, 0.7, 0.9}, 20000, 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].second.no_stops, rows[i - 1].second.no_stops);
  }
}

TEST(Sweep, Errors) {
  EXPECT_THROW(sweep(ClassCounts{1}, {}, 10, 1), DomainError);
  EXPECT_THROW(sweep(ClassCounts{1}, {0.5, 1.2}, 10, 1), DomainError);
}

TEST(BestOrWorst, TwoOptionsAlwaysSucceedAtZero) {
  const BestOrWorstStats s = simulate_best_or_worst(2, 0.0, 10000, 1);
  EXPECT_EQ(s.stats.successes, 10000u);
  EXPECT_EQ(s.best_hits + s.worst_hits, 10000u);
  EXPECT_EQ(s.degenerate, 10000u);  // one derived class is always empty when n = 2
}

TEST(BestOrWorst, SingleOptionIsDegenerate) {
  const BestOrWorstStats s = simulate_best_or_worst(1, 0.3, 1000, 1);
  EXPECT_EQ(s.stats.successes, 0u);
  EXPECT_EQ(s.stats.no_stops, 1000u);
  EXPECT_DOUBLE_EQ(s.degenerate_rate, 1.0);
}

TEST(BestOrWorst, StableAcrossSeedsAndWorkers) {
  const BestOrWorstStats a = simulate_best_or_worst(50, 0.5, 200000, 1);
  const BestOrWorstStats b = simulate_best_or_worst(50, 0.5, 200000, 2);
  EXPECT_NEAR(a.stats.success_rate, b.stats.success_rate,
              4 * std::hypot(a.stats.std_err, b.stats.std_err));
  EXPECT_EQ(a.best_hits + a.worst_hits, a.stats.successes);
  // Symmetric construction: best and worst hits are equally likely.
  const double diff = static_cast<double>(a.best_hits) - static_cast<double>(a.worst_hits);
  EXPECT_LT(std::abs(diff), 4 * std::sqrt(static_cast<double>(a.stats.successes)));
  const BestOrWorstStats c = simulate_best_or_worst(50, 0.5, 200000, 1, 4);
  EXPECT_EQ(a.stats, c.stats);
  EXPECT_EQ(a.best_hits, c.best_hits);
}
