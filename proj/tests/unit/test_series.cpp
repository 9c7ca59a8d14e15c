#include <gtest/gtest.h>

#include "lieloop/series.hpp"

using namespace lieloop;

namespace {

Vec rand_vec(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = nd(rng);
  return v;
}

Vec full(const Vec& g1, const Vec& g2) {
  Vec u(g1.size() + g2.size());
  u << g1, g2;
  return u;
}

}  // namespace

TEST(Bch3, MatchesMatrixLogarithm) {
  // log(exp(tU) exp(tV)) in sl(2,C) against the truncated series; remainder O(t^4).
  const QuasiDoubleAlgebra qd = sl_n_model(2);
  std::mt19937_64 rng(2);
  const Vec u = rand_vec(6, rng), v = rand_vec(6, rng);
  const auto to_matrix = [](const Vec& w) {
    return CMatrix(from_su_coords(w.head(3), 2) + from_sh_coords(w.tail(3), 2));
  };
  for (double t : {0.02, 0.04}) {
    const CMatrix l = matrix_log_near_identity(CMatrix(matrix_exp(CMatrix(t * to_matrix(u))) * matrix_exp(CMatrix(t * to_matrix(v)))));
    const Vec got = full(su_coords(l), sh_coords(l));
    const auto b = bch3(u, v, qd);
    const Vec series = t * b[1] + t * t * b[2] + t * t * t * b[3];
    EXPECT_LT((got - series).norm(), 50.0 * t * t * t * t) << t;
  }
}

TEST(Expansions, AddUpToBchAtTensorLevel) {
  const QuasiDoubleAlgebra qd = change_basis(sl_n_model(2), random_adapted_basis(3, 3, 4));
  const QuasiDoubleParts p = project_components(qd);
  std::mt19937_64 rng(3);
  const Vec x = rand_vec(3, rng), y = rand_vec(3, rng), xi = rand_vec(3, rng);
  const Vec z = Vec::Zero(3);
  const auto bxy = bch3(full(z, x), full(z, y), qd);
  const auto bxxi = bch3(full(z, x), full(xi, z), qd);
  const auto m = expand_m(x, y, p), a = expand_alpha(x, y, p);
  const auto s = expand_sigma(x, xi, p), c = expand_chi(x, xi, p);
  for (int k = 0; k < 4; ++k) {
    EXPECT_LT((full(a.order[k], m.order[k]) - bxy[k]).norm(), 1e-12) << k;
    EXPECT_LT((full(c.order[k], s.order[k]) - bxxi[k]).norm(), 1e-12) << k;
  }
}

TEST(Expansions, LowOrders) {
  const QuasiDoubleParts p = project_components(sl_n_model(2));
  std::mt19937_64 rng(5);
  const Vec x = rand_vec(3, rng), y = rand_vec(3, rng);
  const auto m = expand_m(x, y, p);
  EXPECT_EQ(m.codomain, Codomain::G2);
  EXPECT_LT((m.order[1] - (x + y)).norm(), 1e-15);
  EXPECT_LT(m.order[2].norm(), 1e-15);  // mu = 0 on sh(2)
  const auto a = expand_alpha(x, y, p);
  EXPECT_EQ(a.codomain, Codomain::G1);
  EXPECT_LT((a.order[2] - 0.5 * p.psi_of(x, y)).norm(), 1e-15);
}

TEST(MatrixModel, LowOrdersAgreeWithExpansions) {
  const QuasiDoubleParts p = project_components(sl_n_model(2));
  std::mt19937_64 rng(6);
  const Vec x = rand_vec(3, rng), y = rand_vec(3, rng), xi = rand_vec(3, rng);
  const ModelCoefficients mc = model_coefficients(2, x, y, xi, 1e-2);
  EXPECT_LT((mc.m[1] - (x + y)).norm(), 1e-9);
  EXPECT_LT(mc.m[2].norm(), 1e-8);
  EXPECT_LT((mc.alpha[2] - 0.5 * p.psi_of(x, y)).norm(), 1e-8);
  EXPECT_LT((mc.sigma[1] - x).norm(), 1e-9);
  EXPECT_LT((mc.chi[1] - xi).norm(), 1e-9);
  EXPECT_LT((mc.chi[2] - 0.5 * p.coact_of(x, xi)).norm(), 1e-8);
}

TEST(MatrixModel, SigmaSecondOrderIsFullAction) {
  // sigma(exp tx, exp t xi) = exp(Ad_{exp(-t xi)} t x), so its t^2 coefficient is x^xi, not 1/2 x^xi.
  const QuasiDoubleParts p = project_components(sl_n_model(2));
  std::mt19937_64 rng(7);
  const Vec x = rand_vec(3, rng), y = rand_vec(3, rng), xi = rand_vec(3, rng);
  const ModelCoefficients mc = model_coefficients(2, x, y, xi, 1e-2);
  EXPECT_LT((mc.sigma[2] - p.act_of(x, xi)).norm(), 1e-8);
  EXPECT_GT((mc.sigma[2] - expand_sigma(x, xi, p).order[2]).norm(), 1e-2);
}

TEST(ProductLog, MatchesExpansionsNumerically) {
  TaylorMatchOptions opt;
  opt.samples = 4;
  for (const auto& m : taylor_match_report(opt)) {
    if (m.id.rfind("series.bch.", 0) == 0) EXPECT_LT(m.stat.max, 1e-6) << m.id;
    if (m.id.rfind("series.tensor.", 0) == 0) EXPECT_LT(m.stat.max, 1e-12) << m.id;
  }
}

TEST(TaylorMatch, RejectsBadOptions) {
  TaylorMatchOptions opt;
  opt.h = 1.0;
  EXPECT_THROW(taylor_match_report(opt), InvalidInput);
  opt.h = 1e-2;
  opt.n = 5;
  EXPECT_THROW(taylor_match_report(opt), InvalidInput);
}
