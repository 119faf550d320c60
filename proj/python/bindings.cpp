#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "altbest/analytics.hpp"
#include "altbest/montecarlo.hpp"
#include "altbest/strategy.hpp"

namespace py = pybind11;
using namespace altbest;

namespace {

// Python sees arrivals as (class_id, rank, time) tuples.
using ArrivalTuple = std::tuple<std::uint32_t, std::uint32_t, double>;

std::vector<ArrivalTuple> to_tuples(const std::vector<Arrival>& arrivals) {
  std::vector<ArrivalTuple> out;
  out.reserve(arrivals.size());
  for (const auto& a : arrivals) out.emplace_back(a.class_id, a.rank, a.time);
  return out;
}

Realization to_realization(const std::vector<std::uint32_t>& counts,
                           const std::vector<ArrivalTuple>& arrivals) {
  Realization r{ClassCounts(counts), {}};
  for (const auto& [c, rank, t] : arrivals) r.arrivals.push_back(Arrival{c, rank, t});
  validate(r);
  return r;
}

py::dict outcome_dict(const Outcome& o) {
  py::dict d;
  d["kind"] = to_string(o.kind);
  d["stop_time"] = o.stop_time ? py::cast(*o.stop_time) : py::none();
  d["stopped_class"] = o.stopped_class ? py::cast(*o.stopped_class) : py::none();
  d["stopped_rank"] = o.stopped_rank ? py::cast(*o.stopped_rank) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_altbest, m) {
  m.doc() = "Threshold stopping strategies for the k-class best-choice problem";

  py::class_<ExactProbability>(m, "ExactProbability")
      .def_readonly("value", &ExactProbability::value)
      .def_readonly("abs_error_estimate", &ExactProbability::abs_error_estimate)
      .def_readonly("quad_points", &ExactProbability::quad_points);

  py::class_<SimulationStats>(m, "SimulationStats")
      .def_readonly("trials", &SimulationStats::trials)
      .def_readonly("successes", &SimulationStats::successes)
      .def_readonly("failures", &SimulationStats::failures)
      .def_readonly("no_stops", &SimulationStats::no_stops)
      .def_readonly("success_rate", &SimulationStats::success_rate)
      .def_readonly("failure_rate", &SimulationStats::failure_rate)
      .def_readonly("no_stop_rate", &SimulationStats::no_stop_rate)
      .def_readonly("std_err", &SimulationStats::std_err)
      .def_readonly("no_stop_std_err", &SimulationStats::no_stop_std_err)
      .def_readonly("ci95_low", &SimulationStats::ci95_low)
      .def_readonly("ci95_high", &SimulationStats::ci95_high)
      .def("__eq__", [](const SimulationStats& a, const SimulationStats& b) { return a == b; });

  py::class_<BestOrWorstStats>(m, "BestOrWorstStats")
      .def_readonly("stats", &BestOrWorstStats::stats)
      .def_readonly("best_hits", &BestOrWorstStats::best_hits)
      .def_readonly("worst_hits", &BestOrWorstStats::worst_hits)
      .def_readonly("degenerate", &BestOrWorstStats::degenerate)
      .def_readonly("degenerate_rate", &BestOrWorstStats::degenerate_rate);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("t_star", &OptimizationResult::t_star)
      .def_readonly("value", &OptimizationResult::value)
      .def_readonly("evaluations", &OptimizationResult::evaluations)
      .def_readonly("non_unimodal", &OptimizationResult::non_unimodal)
      .def_readonly("method", &OptimizationResult::method);

  m.def("optimal_threshold", &optimal_threshold, py::arg("k"));
  m.def("lower_bound_h", &lower_bound_h, py::arg("k"), py::arg("t"));
  m.def("density_f", &density_f, py::arg("i"), py::arg("t"), py::arg("s"));
  m.def("no_record_prob_exact", &no_record_prob_exact, py::arg("n"), py::arg("t"), py::arg("s"));
  m.def("no_record_bound", &no_record_bound, py::arg("i"), py::arg("t"), py::arg("s"));

  m.def(
      "exact_success_prob",
      [](const std::vector<std::uint32_t>& counts, double t, std::size_t panels) {
        return exact_success_prob(ClassCounts(counts), t, panels);
      },
      py::arg("counts"), py::arg("t"), py::arg("panels") = kDefaultPanels);

  m.def(
      "sample_realization",
      [](const std::vector<std::uint32_t>& counts, std::uint64_t master_seed,
         std::uint64_t trial_index) {
        return to_tuples(sample_realization(ClassCounts(counts), Seed{master_seed, trial_index}).arrivals);
      },
      py::arg("counts"), py::arg("master_seed"), py::arg("trial_index") = 0,
      "Arrivals as (class_id, rank, time) tuples in time order.");

  m.def(
      "class_maxima_times",
      [](const std::vector<std::uint32_t>& counts, const std::vector<ArrivalTuple>& arrivals) {
        return class_maxima_times(to_realization(counts, arrivals));
      },
      py::arg("counts"), py::arg("arrivals"));

  m.def(
      "run_threshold_strategy",
      [](const std::vector<std::uint32_t>& counts, const std::vector<ArrivalTuple>& arrivals,
         double threshold) {
        return outcome_dict(
            run_threshold_strategy(to_realization(counts, arrivals), ThresholdStrategy(threshold)));
      },
      py::arg("counts"), py::arg("arrivals"), py::arg("threshold"));

  m.def(
      "build_two_stream",
      [](const std::vector<ArrivalTuple>& arrivals) {
        const auto n = static_cast<std::uint32_t>(arrivals.size());
        const TwoStreamRealization two = build_two_stream(to_realization({n}, arrivals));
        py::dict d;
        d["pivot_rank"] = two.pivot_rank;
        d["arrivals"] = to_tuples(two.arrivals);
        d["overall_ranks"] = two.overall_ranks;
        d["class_sizes"] = std::vector<std::uint32_t>{two.class_sizes[0], two.class_sizes[1]};
        d["degenerate"] = two.degenerate();
        return d;
      },
      py::arg("arrivals"), "Splits a single-class stream around its first arrival.");

  m.def(
      "run_best_or_worst",
      [](const std::vector<ArrivalTuple>& arrivals, double threshold) {
        const auto n = static_cast<std::uint32_t>(arrivals.size());
        const BestOrWorstOutcome o =
            run_best_or_worst(to_realization({n}, arrivals), ThresholdStrategy(threshold));
        py::dict d = outcome_dict(o.outcome);
        d["target"] = to_string(o.hit);
        d["selected_overall_rank"] =
            o.selected_overall_rank ? py::cast(*o.selected_overall_rank) : py::none();
        d["better_class_empty"] = o.better_class_empty;
        d["worse_class_empty"] = o.worse_class_empty;
        return d;
      },
      py::arg("arrivals"), py::arg("threshold"));

  m.def(
      "simulate",
      [](const std::vector<std::uint32_t>& counts, double threshold, std::uint64_t trials,
         std::uint64_t master_seed, unsigned workers) {
        py::gil_scoped_release release;
        return simulate({ClassCounts(counts), threshold, trials, master_seed, workers});
      },
      py::arg("counts"), py::arg("threshold"), py::arg("trials"), py::arg("master_seed") = 0,
      py::arg("workers") = 1);

  m.def(
      "sweep",
      [](const std::vector<std::uint32_t>& counts, const std::vector<double>& thresholds,
         std::uint64_t trials, std::uint64_t master_seed, unsigned workers) {
        py::gil_scoped_release release;
        return sweep(ClassCounts(counts), thresholds, trials, master_seed, workers);
      },
      py::arg("counts"), py::arg("thresholds"), py::arg("trials"), py::arg("master_seed") = 0,
      py::arg("workers") = 1);

  m.def(
      "simulate_best_or_worst",
      [](std::uint32_t n, double threshold, std::uint64_t trials, std::uint64_t master_seed,
         unsigned workers) {
        py::gil_scoped_release release;
        return simulate_best_or_worst(n, threshold, trials, master_seed, workers);
      },
      py::arg("n"), py::arg("threshold"), py::arg("trials"), py::arg("master_seed") = 0,
      py::arg("workers") = 1);

  m.def(
      "optimize_threshold",
      [](std::uint32_t k, std::optional<std::vector<std::uint32_t>> counts,
         const std::string& objective, std::size_t grid_points, std::uint64_t trials,
         std::uint64_t master_seed) {
        SearchConfig search;
        search.grid_points = grid_points;
        search.trials = trials;
        search.master_seed = master_seed;
        std::optional<ClassCounts> c;
        if (counts) c.emplace(*counts);
        return optimize_threshold(k, c ? &*c : nullptr, parse_objective(objective), search);
      },
      py::arg("k") = 0, py::arg("counts") = py::none(), py::arg("objective") = "analytic-bound",
      py::arg("grid_points") = 101, py::arg("trials") = 20000, py::arg("master_seed") = 0);
}
