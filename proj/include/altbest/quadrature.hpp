#pragma once

// Composite Gauss-Legendre quadrature over a fixed panel mesh.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace altbest::quad {

/// 8-point Gauss-Legendre nodes and weights on [-1,1].
struct GaussLegendre8 {
  static constexpr std::size_t kNodes = 8;
  static const std::array<double, kNodes> nodes;
  static const std::array<double, kNodes> weights;
};

/// Panel edges on [a,b]. `geometric` grades panels toward `a` (requires a > 0),
/// which resolves integrands varying on the scale of `a` near the left edge.
std::vector<double> panel_edges(double a, double b, std::size_t panels, bool geometric);

/// Integrates f over consecutive panels, summing panel results in order.
double integrate(const std::function<double(double)>& f, std::span<const double> edges);

struct Estimate {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t points = 0;
};

/// Integrates with `panels` and `2*panels` panels; the value is the finer one
/// and the error estimate is their difference.
Estimate integrate_with_estimate(const std::function<double(double)>& f, double a, double b,
                                 std::size_t panels, bool geometric);

}  // namespace altbest::quad
