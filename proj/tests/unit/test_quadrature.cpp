#include <gtest/gtest.h>

#include <cmath>

#include "altbest/errors.hpp"
#include "altbest/quadrature.hpp"

using namespace altbest;

TEST(Quadrature, WeightsSumToTwoAndNodesAreSymmetric) {
  double sum = 0.0;
  for (std::size_t i = 0; i < quad::GaussLegendre8::kNodes; ++i) {
    sum += quad::GaussLegendre8::weights[i];
    EXPECT_DOUBLE_EQ(quad::GaussLegendre8::nodes[i], -quad::GaussLegendre8::nodes[7 - i]);
  }
  EXPECT_NEAR(sum, 2.0, 1e-15);
}

// 8 nodes integrate degree-15 polynomials exactly on each panel.
TEST(Quadrature, ExactForDegree15) {
  const auto edges = quad::panel_edges(0.0, 1.0, 1, false);
  EXPECT_NEAR(quad::integrate([](double s) { return std::pow(s, 15); }, edges), 1.0 / 16.0, 1e-15);
}

TEST(Quadrature, GeometricMeshHandlesPeakNearLeftEdge) {
  const double a = 1e-4;
  const auto est = quad::integrate_with_estimate([](double s) { return 1.0 / s; }, a, 1.0, 256, true);
  EXPECT_NEAR(est.value, -std::log(a), 1e-12);
  EXPECT_LT(est.abs_error, 1e-12);
  EXPECT_EQ(est.points, 512u * 8u);
}

TEST(Quadrature, PanelEdgesCoverInterval) {
  for (bool geometric : {false, true}) {
    const auto e = quad::panel_edges(0.25, 1.0, 10, geometric);
    ASSERT_EQ(e.size(), 11u);
    EXPECT_EQ(e.front(), 0.25);
    EXPECT_EQ(e.back(), 1.0);
    for (std::size_t i = 1; i < e.size(); ++i) EXPECT_LT(e[i - 1], e[i]);
  }
  EXPECT_THROW(quad::panel_edges(0.0, 1.0, 10, true), DomainError);
  EXPECT_THROW(quad::panel_edges(0.0, 1.0, 0, false), DomainError);
}
