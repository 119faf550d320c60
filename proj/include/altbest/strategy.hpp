#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "altbest/model.hpp"

namespace altbest {

/// sigma_t: observe until `threshold`, then take the first within-class
/// record arriving at or after it.
class ThresholdStrategy {
 public:
  /// Throws DomainError unless 0 <= threshold <= 1.
  explicit ThresholdStrategy(double threshold);
  double threshold() const { return threshold_; }

 private:
  double threshold_;
};

enum class OutcomeKind { Success, Failure, NoStop };

const char* to_string(OutcomeKind kind);

struct Outcome {
  OutcomeKind kind = OutcomeKind::NoStop;
  std::optional<double> stop_time;
  std::optional<std::uint32_t> stopped_class;
  std::optional<std::uint32_t> stopped_rank;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Runs the strategy over time-ordered arrivals drawn from `num_classes`
/// classes. Classes may be empty here; the two-stream construction needs that.
Outcome run_threshold_strategy(std::span<const Arrival> arrivals, std::size_t num_classes,
                               const ThresholdStrategy& strategy);

inline Outcome run_threshold_strategy(const Realization& r, const ThresholdStrategy& strategy) {
  return run_threshold_strategy(r.arrivals, r.counts.k(), strategy);
}

/// One stream split around its first arrival (the pivot). Class 0 holds the
/// later arrivals that beat the pivot, ranked best-first, so its rank 1 is the
/// overall best. Class 1 holds those the pivot beats, ranked worst-first, so
/// its rank 1 is the overall worst.
struct TwoStreamRealization {
  std::uint32_t pivot_rank = 0;
  double pivot_time = 0.0;
  std::uint32_t total = 0;
  std::vector<Arrival> arrivals;         // derived two-class arrivals, time order
  std::vector<std::uint32_t> overall_ranks;  // parallel to arrivals
  std::uint32_t class_sizes[2] = {0, 0};

  bool class_empty(std::size_t c) const { return class_sizes[c] == 0; }
  bool degenerate() const { return class_empty(0) || class_empty(1); }
};

/// `stream` must be single-class; its within-class ranks are the overall
/// ranks (1 = best). Throws ModelError otherwise.
TwoStreamRealization build_two_stream(const Realization& stream);

enum class Target { None, Best, Worst };

const char* to_string(Target target);

struct BestOrWorstOutcome {
  Outcome outcome;  // Success means the overall best or worst was selected
  Target hit = Target::None;
  std::optional<std::uint32_t> selected_overall_rank;
  bool better_class_empty = false;
  bool worse_class_empty = false;
};

BestOrWorstOutcome run_best_or_worst(const Realization& stream, const ThresholdStrategy& strategy);

}  // namespace altbest
