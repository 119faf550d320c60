#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "altbest/analytics.hpp"
#include "altbest/errors.hpp"
#include "altbest/montecarlo.hpp"

namespace altbest {

namespace {

struct Probe {
  double t;
  double value;
};

std::vector<Probe> evaluate_grid(const std::function<double(double)>& f, std::size_t points) {
  std::vector<Probe> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = {t, f(t)};
  }
  return grid;
}

std::size_t argmax(const std::vector<Probe>& grid) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i].value > grid[best].value) best = i;
  }
  return best;
}

// Rises to the peak, then falls, up to `slack` in either direction.
bool unimodal_around(const std::vector<Probe>& grid, std::size_t peak, double slack) {
  for (std::size_t i = 1; i <= peak; ++i) {
    if (grid[i].value < grid[i - 1].value - slack) return false;
  }
  for (std::size_t i = peak + 1; i < grid.size(); ++i) {
    if (grid[i].value > grid[i - 1].value + slack) return false;
  }
  return true;
}

Probe golden_section(const std::function<double(double)>& f, double lo, double hi,
                     double tolerance, std::size_t max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (std::size_t it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Probe{c, fc} : Probe{d, fd};
}

}  // namespace

OptimizationResult maximize_on_unit_interval(const std::function<double(double)>& objective,
                                             const SearchConfig& search, double slack) {
  if (search.grid_points < 3 || search.dense_points < 3) {
    throw DomainError("optimize_threshold: grids need at least 3 points");
  }
  OptimizationResult result;
  result.method = "grid+golden";
  auto f = [&](double t) {
    ++result.evaluations;
    return objective(t);
  };

  std::vector<Probe> grid = evaluate_grid(f, search.grid_points);
  std::size_t peak = argmax(grid);
  if (!unimodal_around(grid, peak, slack)) {
    result.non_unimodal = true;
    result.method = "dense-grid+golden";
    grid = evaluate_grid(f, search.dense_points);
    peak = argmax(grid);
  }

  const double lo = grid[peak == 0 ? 0 : peak - 1].t;
  const double hi = grid[std::min(peak + 1, grid.size() - 1)].t;
  Probe best = grid[peak];
  const Probe refined = golden_section(f, lo, hi, search.tolerance, search.max_iterations);
  // Gains below rounding noise are not improvements; keep the grid point.
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(best.value);
  if (refined.value > best.value + noise) best = refined;
  result.t_star = best.t;
  result.value = best.value;
  return result;
}

OptimizationResult optimize_threshold(std::uint32_t k, const ClassCounts* counts,
                                      Objective objective, const SearchConfig& search) {
  if (counts != nullptr) k = static_cast<std::uint32_t>(counts->k());
  if (k == 0) throw DomainError("optimize_threshold: k must be at least 1");
  if (objective != Objective::AnalyticBound && counts == nullptr) {
    throw DomainError("optimize_threshold: exact and monte-carlo objectives need class counts");
  }

  double slack = 1e-12;
  std::function<double(double)> f;
  switch (objective) {
    case Objective::AnalyticBound:
      f = [k](double t) { return lower_bound_h(k, t); };
      break;
    case Objective::Exact:
      f = [counts, &search](double t) {
        return exact_success_prob(*counts, t, search.panels).value;
      };
      break;
    case Objective::MonteCarlo:
      // Common random numbers: every threshold sees the same master seed.
      f = [counts, &search](double t) {
        return simulate({*counts, t, search.trials, search.master_seed, search.workers})
            .success_rate;
      };
      slack = 4.0 * std::sqrt(0.25 / static_cast<double>(search.trials));
      break;
  }
  OptimizationResult result = maximize_on_unit_interval(f, search, slack);
  result.method = std::string(to_string(objective)) + "/" + result.method;
  return result;
}

}  // namespace altbest
