#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "lieloop/finite_difference.hpp"

using namespace lieloop;

TEST(Fornberg, FivePointFirstDerivative) {
  const auto w = fd::weights(fd::central_nodes(5), 1);
  const double want[] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
  ASSERT_EQ(w.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(w[i], want[i], 1e-15);
}

TEST(Fornberg, ThreePointSecondDerivative) {
  const auto w = fd::weights(fd::central_nodes(3), 2);
  EXPECT_NEAR(w[0], 1.0, 1e-15);
  EXPECT_NEAR(w[1], -2.0, 1e-15);
  EXPECT_NEAR(w[2], 1.0, 1e-15);
}

TEST(Fornberg, ForwardFirstDerivative) {
  const auto w = fd::weights(fd::forward_nodes(3), 1);
  EXPECT_NEAR(w[0], -1.5, 1e-15);
  EXPECT_NEAR(w[1], 2.0, 1e-15);
  EXPECT_NEAR(w[2], -0.5, 1e-15);
}

TEST(CentralDerivative, RichardsonImprovesAccuracy) {
  const auto f = [](double t) { return std::sin(1.0 + t); };
  const double plain = fd::central_derivative(f, 1, 1e-1);
  const double rich = fd::central_derivative(f, 1, 1e-1, 5, true);
  EXPECT_LT(std::abs(rich - std::cos(1.0)), std::abs(plain - std::cos(1.0)));
  EXPECT_NEAR(rich, std::cos(1.0), 1e-9);
}

TEST(CentralDerivative, VectorValued) {
  const auto f = [](double t) {
    Eigen::Vector2d v(std::exp(t), t * t * t);
    return v;
  };
  const Eigen::Vector2d d2 = fd::central_derivative(f, 2, 1e-2, 5, true);
  EXPECT_NEAR(d2[0], 1.0, 1e-9);
  EXPECT_NEAR(d2[1], 0.0, 1e-9);
}

TEST(TaylorCoefficients, Exponential) {
  const auto c = fd::taylor_coefficients([](double t) { return std::exp(2.0 * t); }, 3, 1e-2);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_NEAR(c[0], 1.0, 1e-15);
  EXPECT_NEAR(c[1], 2.0, 1e-10);
  EXPECT_NEAR(c[2], 2.0, 1e-9);
  EXPECT_NEAR(c[3], 4.0 / 3.0, 1e-6);
}
