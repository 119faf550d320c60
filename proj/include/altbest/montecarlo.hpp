#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "altbest/model.hpp"
#include "altbest/strategy.hpp"

namespace altbest {

struct SimulationConfig {
  ClassCounts counts{1};
  double threshold = 0.5;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
};

struct SimulationStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t no_stops = 0;
  double success_rate = 0.0;
  double failure_rate = 0.0;
  double no_stop_rate = 0.0;
  double std_err = 0.0;          // of success_rate
  double no_stop_std_err = 0.0;  // of no_stop_rate
  double ci95_low = 0.0;
  double ci95_high = 0.0;

  friend bool operator==(const SimulationStats&, const SimulationStats&) = default;
};

/// Wald statistics from raw counts.
SimulationStats make_stats(std::uint64_t successes, std::uint64_t failures,
                           std::uint64_t no_stops);

SimulationStats simulate(const SimulationConfig& cfg);

/// Runs every threshold on the same per-trial realizations. Output is sorted
/// by threshold. Throws DomainError on an empty grid or a value outside [0,1].
std::vector<std::pair<double, SimulationStats>> sweep(const ClassCounts& counts,
                                                      std::vector<double> thresholds,
                                                      std::uint64_t trials_per_point,
                                                      std::uint64_t master_seed,
                                                      unsigned workers = 1);

struct BestOrWorstStats {
  SimulationStats stats;  // successes = best or worst selected
  std::uint64_t best_hits = 0;
  std::uint64_t worst_hits = 0;
  std::uint64_t degenerate = 0;  // trials with an empty derived class
  double degenerate_rate = 0.0;
};

BestOrWorstStats simulate_best_or_worst(std::uint32_t n, double threshold, std::uint64_t trials,
                                        std::uint64_t master_seed, unsigned workers = 1);

}  // namespace altbest
