#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "altbest/model.hpp"

namespace altbest {

/// t_k = k^{-1/(k-1)}; 1/e for k = 1 (the continuous limit).
double optimal_threshold(std::uint32_t k);

/// h_k(t) = k/(k-1) (t - t^k), the lower bound on sigma_t's success
/// probability. For k = 1 the limit -t ln t is used, with h(0) = 0.
double lower_bound_h(std::uint32_t k, double t);

struct BoundCurve {
  std::uint32_t k = 1;
  std::vector<std::pair<double, double>> samples;  // (t, h_k(t))
};

BoundCurve bound_curve(std::uint32_t k, const std::vector<double>& ts);

/// Conditional density at s of the earliest of i class maxima, given all i
/// arrive in [t,1]: i (1-s)^{i-1} / (1-t)^i on [t,1], zero elsewhere.
double density_f(std::uint32_t i, double t, double s);

/// Exact probability that n iid uniform, uniquely ranked arrivals show no
/// record in [t,s): (1-s)^n + (1 - (1-s)^n) t/s.
double no_record_prob_exact(std::uint64_t n, double t, double s);

/// (t/s)^i, the lower bound on seeing no record of i classes in [t,s).
double no_record_bound(std::uint32_t i, double t, double s);

struct ExactProbability {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t quad_points = 0;
};

inline constexpr std::size_t kDefaultPanels = 256;

/// Exact success probability of sigma_t for finite class counts:
///   sum_c int_t^1 q_c(s) prod_{j != c} r_j(s) ds
/// where r_j is no_record_prob_exact(n_j, t, s) and q_c uses n_c - 1 (the
/// remaining options of the class whose maximum arrives at s).
ExactProbability exact_success_prob(const ClassCounts& counts, double t,
                                    std::size_t panels = kDefaultPanels);

/// The integrand above at a single s in [t,1].
double success_integrand(const ClassCounts& counts, double t, double s);

enum class Objective { AnalyticBound, Exact, MonteCarlo };

const char* to_string(Objective objective);
Objective parse_objective(const std::string& name);

struct SearchConfig {
  std::size_t grid_points = 101;   // coarse grid over [0,1], endpoints included
  std::size_t dense_points = 10001;  // fallback grid when the coarse grid is not unimodal
  double tolerance = 1e-9;         // golden-section bracket width
  std::size_t max_iterations = 200;
  std::size_t panels = kDefaultPanels;
  std::uint64_t trials = 100000;   // monte-carlo objective only
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
};

struct OptimizationResult {
  double t_star = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool non_unimodal = false;  // coarse grid was not unimodal; dense grid used
  std::string method;
};

/// Coarse grid over [0,1], then golden-section refinement inside the bracket
/// around the grid maximum. If the grid values are not unimodal (beyond
/// `slack`), the dense grid is used instead and the result is flagged.
OptimizationResult maximize_on_unit_interval(const std::function<double(double)>& objective,
                                             const SearchConfig& search, double slack);

/// Maximizes the objective over t in [0,1]. `k` is used for the analytic
/// bound when `counts` is absent; otherwise k = counts->k().
OptimizationResult optimize_threshold(std::uint32_t k, const ClassCounts* counts,
                                      Objective objective, const SearchConfig& search = {});

}  // namespace altbest
