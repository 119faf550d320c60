#include "altbest/analytics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "altbest/errors.hpp"
#include "altbest/quadrature.hpp"

namespace altbest {

namespace {

void require_unit_interval(double t, const char* what) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0,1], got " + std::to_string(t));
  }
}

}  // namespace

double optimal_threshold(std::uint32_t k) {
  if (k == 0) throw DomainError("optimal_threshold: k must be at least 1");
  if (k == 1) return 1.0 / std::numbers::e;
  const double kd = k;
  return std::pow(kd, -1.0 / (kd - 1.0));
}

double lower_bound_h(std::uint32_t k, double t) {
  if (k == 0) throw DomainError("lower_bound_h: k must be at least 1");
  require_unit_interval(t, "lower_bound_h: t");
  if (k == 1) return t == 0.0 ? 0.0 : -t * std::log(t);
  const double kd = k;
  return kd / (kd - 1.0) * (t - std::pow(t, kd));
}

BoundCurve bound_curve(std::uint32_t k, const std::vector<double>& ts) {
  BoundCurve curve{k, {}};
  curve.samples.reserve(ts.size());
  for (double t : ts) curve.samples.emplace_back(t, lower_bound_h(k, t));
  return curve;
}

double density_f(std::uint32_t i, double t, double s) {
  if (i == 0) throw DomainError("density_f: i must be at least 1");
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("density_f: t must lie in [0,1)");
  if (s < t || s > 1.0) return 0.0;
  const double id = i;
  return id * std::pow(1.0 - s, id - 1.0) / std::pow(1.0 - t, id);
}

double no_record_prob_exact(std::uint64_t n, double t, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("no_record_prob_exact: s must lie in (0,1]");
  if (!(t >= 0.0)) throw DomainError("no_record_prob_exact: t must be non-negative");
  if (t > s) throw DomainError("no_record_prob_exact: need t <= s");
  if (n == 0) return 1.0;
  // All n arrivals fall after s, or the best arrival in [0,s) came before t.
  const double none_before_s = std::pow(1.0 - s, static_cast<double>(n));
  return none_before_s + (1.0 - none_before_s) * (t / s);
}

double no_record_bound(std::uint32_t i, double t, double s) {
  if (i == 0) throw DomainError("no_record_bound: i must be at least 1");
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("no_record_bound: s must lie in (0,1]");
  if (!(t >= 0.0) || t > s) throw DomainError("no_record_bound: need 0 <= t <= s");
  return std::pow(t / s, static_cast<double>(i));
}

double success_integrand(const ClassCounts& counts, double t, double s) {
  const std::size_t k = counts.k();
  // prefix[j] = prod_{m<j} r_m, then multiply by suffix products on the way back.
  std::vector<double> r(k);
  for (std::size_t j = 0; j < k; ++j) r[j] = no_record_prob_exact(counts[j], t, s);
  std::vector<double> prefix(k + 1, 1.0);
  for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * r[j];
  double total = 0.0;
  double suffix = 1.0;
  for (std::size_t c = k; c-- > 0;) {
    const double q = no_record_prob_exact(counts[c] - 1, t, s);
    total += q * prefix[c] * suffix;
    suffix *= r[c];
  }
  return total;
}

ExactProbability exact_success_prob(const ClassCounts& counts, double t, std::size_t panels) {
  require_unit_interval(t, "exact_success_prob: t");
  if (panels == 0) throw DomainError("exact_success_prob: need at least one panel");
  if (t == 1.0) return ExactProbability{0.0, 0.0, 0};
  if (t == 0.0) {
    // The t/s terms vanish: each class contributes int_0^1 (1-s)^{N-1} ds = 1/N.
    return ExactProbability{static_cast<double>(counts.k()) / static_cast<double>(counts.total()),
                            0.0, 0};
  }
  const auto est = quad::integrate_with_estimate(
      [&](double s) { return success_integrand(counts, t, s); }, t, 1.0, panels, true);
  return ExactProbability{est.value, est.abs_error, est.points};
}

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::AnalyticBound: return "analytic-bound";
    case Objective::Exact: return "exact";
    case Objective::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

Objective parse_objective(const std::string& name) {
  if (name == "analytic-bound") return Objective::AnalyticBound;
  if (name == "exact") return Objective::Exact;
  if (name == "monte-carlo") return Objective::MonteCarlo;
  throw DomainError("unknown objective '" + name + "'");
}

}  // namespace altbest
