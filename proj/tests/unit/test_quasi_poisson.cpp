#include <cmath>

#include <gtest/gtest.h>

#include "lieloop/quasi_poisson.hpp"

using namespace lieloop;

namespace {
const double r2 = std::sqrt(2.0);
}

TEST(Chart, RoundTrip) {
  const Vec3 c(0.2, -0.3, 0.25);
  EXPECT_LT((point_to_chart(chart_to_point(c)) - c).norm(), 1e-14);
  EXPECT_THROW(chart_to_point(Vec3(1.0, 1.0, 0.0)), InvalidInput);
}

TEST(Fields, AtIdentity) {
  // e_i^lambda(e) = e_i and rho(xi)(e) = 0.
  const Vec3 o = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = Vec3::Unit(i);
    EXPECT_LT((translated_field(e)(o) - e).norm(), 1e-10);
    EXPECT_LT(action_field(e)(o).norm(), 1e-12);
  }
}

TEST(Fields, ActionFieldIsLinearRotation) {
  // sigma(a, g) = g^-1 a g, so rho(xi) is the linear field c -> [c, xi] in chart coordinates.
  const Vec3 c(0.1, 0.2, -0.15);
  const Vec3 r = action_field(Vec3::Unit(0))(c);
  // [e_j, eps_1] in sh coordinates: e2 -> -sqrt2 e3, e3 -> sqrt2 e2
  EXPECT_NEAR(r[0], 0.0, 1e-9);
  EXPECT_NEAR(r[1], r2 * c[2], 1e-9);
  EXPECT_NEAR(r[2], -r2 * c[1], 1e-9);
}

TEST(Bivector, VanishesAtIdentityAndIsAntisymmetric) {
  const auto P = bivector_P();
  EXPECT_EQ(P(Vec3::Zero()).cwiseAbs().maxCoeff(), 0.0);
  const Mat3 p = P(Vec3(0.2, 0.1, -0.3));
  EXPECT_EQ((p + p.transpose()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_GT(p.cwiseAbs().maxCoeff(), 1e-3);
}

TEST(Bivector, SchoutenVanishes) {
  const auto P = bivector_P();
  for (const Vec3& c : sample_grid(4, 0.5)) EXPECT_LT(schouten_PP(P, c, 1e-3).max_abs(), 1e-6);
}

TEST(Bivector, PerturbedFieldFailsSchouten) {
  // Adding a non-Poisson bivector term breaks [P,P] = 0.
  const auto P = bivector_P();
  const BivectorFieldModel Q = [&P](const Vec3& c) -> Mat3 {
    return P(c) + 0.5 * wedge(Vec3::Unit(0), Vec3(0.0, c[0], c[2]));
  };
  double worst = 0.0;
  for (const Vec3& c : sample_grid(4, 0.5)) worst = std::max(worst, schouten_PP(Q, c, 1e-3).max_abs());
  EXPECT_GT(worst, 1e-2);
}

TEST(Linearization, GivesSu2Cobracket) {
  const Cobracket g = linearize_P(bivector_P());
  EXPECT_NEAR(g(2, 0, 1), r2, 1e-6);
  EXPECT_NEAR(g(0, 1, 2), r2, 1e-6);
  EXPECT_NEAR(g(1, 2, 0), r2, 1e-6);
  const BivectorFieldModel shifted = [](const Vec3&) -> Mat3 { return wedge(Vec3::Unit(0), Vec3::Unit(1)); };
  EXPECT_THROW(linearize_P(shifted), InvalidInput);
}

TEST(Gradient, ExactOnQuadraticField) {
  const VectorFieldModel f = [](const Vec3& c) -> Vec3 { return Vec3(c[0] * c[1], c[2] * c[2], 3.0 * c[0]); };
  const auto g = gradient(f, Vec3(0.3, -0.2, 0.1), 1e-3);
  EXPECT_NEAR(g[0][0], -0.2, 1e-10);
  EXPECT_NEAR(g[1][0], 0.3, 1e-10);
  EXPECT_NEAR(g[2][1], 0.2, 1e-10);
  EXPECT_NEAR(g[0][2], 3.0, 1e-10);
}

TEST(Wedge, Components) {
  const Mat3 w = wedge(Vec3::Unit(0), Vec3::Unit(1));
  EXPECT_EQ(w(0, 1), 1.0);
  EXPECT_EQ(w(1, 0), -1.0);
  const Tensor3 t = wedge3(Vec3::Unit(0), Vec3::Unit(1), Vec3::Unit(2));
  EXPECT_EQ(t(0, 1, 2), 1.0);
  EXPECT_EQ(t(1, 0, 2), -1.0);
  EXPECT_EQ(t(2, 0, 1), 1.0);
}

TEST(Grid, DeterministicInsideBall) {
  const auto a = sample_grid(16, 0.5), b = sample_grid(16, 0.5);
  ASSERT_EQ(a.size(), 16u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_LE(a[i].norm(), 0.5);
  }
}

TEST(Sh2Suite, AllRelationsHold) {
  Sh2Options opt;
  opt.grid_points = 4;
  opt.samples = 4;
  for (const auto& m : verify_prop2(opt)) EXPECT_LT(m.stat.max, 1e-5) << m.id;
  for (const auto& m : verify_def7_and_cor3(opt)) EXPECT_LT(m.stat.max, 1e-5) << m.id;
}

TEST(Sh2Suite, TangentBialgebra) {
  Sh2Options opt;
  const TangentExtraction t = extract_tangent_bialgebra(opt);
  EXPECT_LT(t.axioms.max(), 1e-3);
  EXPECT_LT(t.mu_error, 1e-3);
  EXPECT_LT(t.gamma_error, 1e-3);
  EXPECT_LT(t.psi_error, 1e-3);
}
