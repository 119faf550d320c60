#include "altbest/strategy.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "altbest/errors.hpp"

namespace altbest {

ThresholdStrategy::ThresholdStrategy(double threshold) : threshold_(threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw DomainError("threshold must lie in [0,1], got " + std::to_string(threshold));
  }
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Success: return "success";
    case OutcomeKind::Failure: return "failure";
    case OutcomeKind::NoStop: return "no_stop";
  }
  return "?";
}

const char* to_string(Target target) {
  switch (target) {
    case Target::None: return "none";
    case Target::Best: return "best";
    case Target::Worst: return "worst";
  }
  return "?";
}

Outcome run_threshold_strategy(std::span<const Arrival> arrivals, std::size_t num_classes,
                               const ThresholdStrategy& strategy) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  // Small k is the common case; avoid a heap allocation per trial.
  std::uint32_t inline_best[8];
  std::vector<std::uint32_t> heap_best;
  std::uint32_t* best = inline_best;
  if (num_classes > 8) {
    heap_best.resize(num_classes);
    best = heap_best.data();
  }
  std::fill(best, best + num_classes, kNone);

  const double t = strategy.threshold();
  for (const Arrival& a : arrivals) {
    const bool record = a.rank < best[a.class_id];
    if (record) best[a.class_id] = a.rank;
    if (record && a.time >= t) {
      return Outcome{a.rank == 1 ? OutcomeKind::Success : OutcomeKind::Failure, a.time,
                     a.class_id, a.rank};
    }
  }
  return Outcome{};
}

TwoStreamRealization build_two_stream(const Realization& stream) {
  if (stream.counts.k() != 1) {
    throw ModelError("two-stream construction needs a single totally ordered stream");
  }
  TwoStreamRealization out;
  out.total = stream.counts[0];
  const Arrival& pivot = stream.arrivals.front();
  out.pivot_rank = pivot.rank;
  out.pivot_time = pivot.time;
  out.class_sizes[0] = out.pivot_rank - 1;
  out.class_sizes[1] = out.total - out.pivot_rank;
  out.arrivals.reserve(stream.arrivals.size() - 1);
  out.overall_ranks.reserve(stream.arrivals.size() - 1);
  for (std::size_t i = 1; i < stream.arrivals.size(); ++i) {
    const Arrival& a = stream.arrivals[i];
    if (a.rank < out.pivot_rank) {
      out.arrivals.push_back(Arrival{0, a.rank, a.time});
    } else {
      out.arrivals.push_back(Arrival{1, out.total - a.rank + 1, a.time});
    }
    out.overall_ranks.push_back(a.rank);
  }
  return out;
}

BestOrWorstOutcome run_best_or_worst(const Realization& stream, const ThresholdStrategy& strategy) {
  const TwoStreamRealization two = build_two_stream(stream);
  BestOrWorstOutcome result;
  result.better_class_empty = two.class_empty(0);
  result.worse_class_empty = two.class_empty(1);
  result.outcome = run_threshold_strategy(two.arrivals, 2, strategy);
  if (result.outcome.kind == OutcomeKind::NoStop) return result;

  // Recover the overall rank of the selected derived arrival.
  for (std::size_t i = 0; i < two.arrivals.size(); ++i) {
    if (two.arrivals[i].time == *result.outcome.stop_time &&
        two.arrivals[i].class_id == *result.outcome.stopped_class &&
        two.arrivals[i].rank == *result.outcome.stopped_rank) {
      result.selected_overall_rank = two.overall_ranks[i];
      break;
    }
  }
  if (result.outcome.kind == OutcomeKind::Success) {
    result.hit = *result.outcome.stopped_class == 0 ? Target::Best : Target::Worst;
  }
  return result;
}

}  // namespace altbest
