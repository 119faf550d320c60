#include "altbest/quadrature.hpp"

#include <cmath>

#include "altbest/errors.hpp"

namespace altbest::quad {

const std::array<double, 8> GaussLegendre8::nodes = {
    -0.9602898564975362316835609, -0.7966664774136267395915539, -0.5255324099163289858177390,
    -0.1834346424956498049394761, 0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};

const std::array<double, 8> GaussLegendre8::weights = {
    0.1012285362903762591525314, 0.2223810344533744705443560, 0.3137066458778872873379622,
    0.3626837833783619829651504, 0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

std::vector<double> panel_edges(double a, double b, std::size_t panels, bool geometric) {
  if (panels == 0) throw DomainError("quadrature: need at least one panel");
  if (!(a <= b)) throw DomainError("quadrature: interval is reversed");
  if (geometric && !(a > 0.0)) throw DomainError("quadrature: geometric mesh needs a > 0");
  std::vector<double> edges(panels + 1);
  const double log_ratio = geometric ? std::log(b / a) : 0.0;
  for (std::size_t i = 0; i <= panels; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(panels);
    edges[i] = geometric ? a * std::exp(log_ratio * frac) : a + (b - a) * frac;
  }
  edges.front() = a;
  edges.back() = b;
  return edges;
}

double integrate(const std::function<double(double)>& f, std::span<const double> edges) {
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    double panel = 0.0;
    for (std::size_t i = 0; i < GaussLegendre8::kNodes; ++i) {
      panel += GaussLegendre8::weights[i] * f(mid + half * GaussLegendre8::nodes[i]);
    }
    total += half * panel;
  }
  return total;
}

Estimate integrate_with_estimate(const std::function<double(double)>& f, double a, double b,
                                 std::size_t panels, bool geometric) {
  const auto coarse_edges = panel_edges(a, b, panels, geometric);
  const auto fine_edges = panel_edges(a, b, 2 * panels, geometric);
  const double coarse = integrate(f, coarse_edges);
  const double fine = integrate(f, fine_edges);
  return Estimate{fine, std::abs(fine - coarse), 2 * panels * GaussLegendre8::kNodes};
}

}  // namespace altbest::quad
