"""Threshold stopping strategies for the k-class best-choice problem."""

from ._altbest import (
    ExactProbability,
    OptimizationResult,
    SimulationStats,
    BestOrWorstStats,
    build_two_stream,
    class_maxima_times,
    density_f,
    exact_success_prob,
    lower_bound_h,
    no_record_bound,
    no_record_prob_exact,
    optimal_threshold,
    optimize_threshold,
    run_best_or_worst,
    run_threshold_strategy,
    sample_realization,
    simulate,
    simulate_best_or_worst,
    sweep,
)

__all__ = [
    "ExactProbability",
    "OptimizationResult",
    "SimulationStats",
    "BestOrWorstStats",
    "build_two_stream",
    "class_maxima_times",
    "density_f",
    "exact_success_prob",
    "lower_bound_h",
    "no_record_bound",
    "no_record_prob_exact",
    "optimal_threshold",
    "optimize_threshold",
    "run_best_or_worst",
    "run_threshold_strategy",
    "sample_realization",
    "simulate",
    "simulate_best_or_worst",
    "sweep",
]
