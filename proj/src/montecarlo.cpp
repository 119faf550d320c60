#include "altbest/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "altbest/errors.hpp"

namespace altbest {

namespace {

constexpr std::uint64_t kChunk = 4096;

// Splits [0, trials) into fixed chunks dealt round-robin to workers. Each
// worker accumulates into its own slot; callers add the slots as integers,
// so the totals never depend on the worker count.
template <class Fn>
void for_each_chunk(std::uint64_t trials, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));
  auto run = [&](unsigned w) {
    for (std::uint64_t c = w; c < chunks; c += workers) {
      fn(w, c * kChunk, std::min(trials, (c + 1) * kChunk));
    }
  };
  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
}

struct Tally {
  std::uint64_t success = 0, failure = 0, no_stop = 0;

  void add(OutcomeKind kind) {
    switch (kind) {
      case OutcomeKind::Success: ++success; break;
      case OutcomeKind::Failure: ++failure; break;
      case OutcomeKind::NoStop: ++no_stop; break;
    }
  }
  Tally& operator+=(const Tally& o) {
    success += o.success;
    failure += o.failure;
    no_stop += o.no_stop;
    return *this;
  }
};

}  // namespace

SimulationStats make_stats(std::uint64_t successes, std::uint64_t failures,
                           std::uint64_t no_stops) {
  SimulationStats s;
  s.trials = successes + failures + no_stops;
  s.successes = successes;
  s.failures = failures;
  s.no_stops = no_stops;
  if (s.trials == 0) return s;
  const double n = static_cast<double>(s.trials);
  s.success_rate = successes / n;
  s.failure_rate = failures / n;
  s.no_stop_rate = no_stops / n;
  s.std_err = std::sqrt(s.success_rate * (1.0 - s.success_rate) / n);
  s.no_stop_std_err = std::sqrt(s.no_stop_rate * (1.0 - s.no_stop_rate) / n);
  s.ci95_low = std::clamp(s.success_rate - 1.96 * s.std_err, 0.0, 1.0);
  s.ci95_high = std::clamp(s.success_rate + 1.96 * s.std_err, 0.0, 1.0);
  return s;
}

SimulationStats simulate(const SimulationConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("simulate: trials must be at least 1");
  const ThresholdStrategy strategy(cfg.threshold);
  const unsigned workers = std::max(1u, cfg.workers);
  std::vector<Tally> tallies(workers);
  for_each_chunk(cfg.trials, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Realization r{cfg.counts, {}};
    Tally local;
    for (std::uint64_t i = begin; i < end; ++i) {
      sample_realization_into(cfg.counts, Seed{cfg.master_seed, i}, r);
      local.add(run_threshold_strategy(r, strategy).kind);
    }
    tallies[w] += local;
  });
  Tally total;
  for (const Tally& t : tallies) total += t;
  return make_stats(total.success, total.failure, total.no_stop);
}

std::vector<std::pair<double, SimulationStats>> sweep(const ClassCounts& counts,
                                                      std::vector<double> thresholds,
                                                      std::uint64_t trials_per_point,
                                                      std::uint64_t master_seed,
                                                      unsigned workers) {
  if (thresholds.empty()) throw DomainError("sweep: threshold grid is empty");
  if (trials_per_point < 1) throw DomainError("sweep: trials must be at least 1");
  std::sort(thresholds.begin(), thresholds.end());
  std::vector<ThresholdStrategy> strategies;
  strategies.reserve(thresholds.size());
  for (double t : thresholds) strategies.emplace_back(t);

  workers = std::max(1u, workers);
  std::vector<std::vector<Tally>> tallies(workers, std::vector<Tally>(thresholds.size()));
  for_each_chunk(trials_per_point, workers,
                 [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                   Realization r{counts, {}};
                   std::vector<Tally> local(strategies.size());
                   for (std::uint64_t i = begin; i < end; ++i) {
                     sample_realization_into(counts, Seed{master_seed, i}, r);
                     for (std::size_t g = 0; g < strategies.size(); ++g) {
                       local[g].add(run_threshold_strategy(r, strategies[g]).kind);
                     }
                   }
                   for (std::size_t g = 0; g < local.size(); ++g) tallies[w][g] += local[g];
                 });

  std::vector<std::pair<double, SimulationStats>> out;
  out.reserve(thresholds.size());
  for (std::size_t g = 0; g < thresholds.size(); ++g) {
    Tally total;
    for (const auto& per_worker : tallies) total += per_worker[g];
    out.emplace_back(thresholds[g], make_stats(total.success, total.failure, total.no_stop));
  }
  return out;
}

BestOrWorstStats simulate_best_or_worst(std::uint32_t n, double threshold, std::uint64_t trials,
                                        std::uint64_t master_seed, unsigned workers) {
  if (n < 1) throw ModelError("best-or-worst: stream needs at least one option");
  if (trials < 1) throw DomainError("best-or-worst: trials must be at least 1");
  const ThresholdStrategy strategy(threshold);
  const ClassCounts counts{n};
  workers = std::max(1u, workers);
  struct Local {
    Tally tally;
    std::uint64_t best = 0, worst = 0, degenerate = 0;
  };
  std::vector<Local> locals(workers);
  for_each_chunk(trials, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Realization r{counts, {}};
    Local local;
    for (std::uint64_t i = begin; i < end; ++i) {
      sample_realization_into(counts, Seed{master_seed, i}, r);
      const BestOrWorstOutcome o = run_best_or_worst(r, strategy);
      local.tally.add(o.outcome.kind);
      if (o.hit == Target::Best) ++local.best;
      if (o.hit == Target::Worst) ++local.worst;
      if (o.better_class_empty || o.worse_class_empty) ++local.degenerate;
    }
    locals[w].tally += local.tally;
    locals[w].best += local.best;
    locals[w].worst += local.worst;
    locals[w].degenerate += local.degenerate;
  });
  BestOrWorstStats out;
  Tally total;
  for (const Local& l : locals) {
    total += l.tally;
    out.best_hits += l.best;
    out.worst_hits += l.worst;
    out.degenerate += l.degenerate;
  }
  out.stats = make_stats(total.success, total.failure, total.no_stop);
  out.degenerate_rate = static_cast<double>(out.degenerate) / static_cast<double>(trials);
  return out;
}

}  // namespace altbest
