#include <algorithm>

#include <gtest/gtest.h>

#include "lieloop/lie_loop.hpp"
#include "lieloop/quasi_double_group.hpp"

using namespace lieloop;

TEST(QuasiDoubleGroup, AlphaTimesMIsProduct) {
  for (int n : {2, 3}) {
    const HermitianPD a = sample_sh(n, 0.6, 1), b = sample_sh(n, 0.6, 2);
    const CMatrix lhs = alpha(a, b).matrix() * loop_mul(a, b).matrix();
    EXPECT_LT(frobenius_distance(lhs, a.matrix() * b.matrix()), 1e-12);
  }
}

TEST(QuasiDoubleGroup, SigmaChiSplitProduct) {
  const HermitianPD a = sample_sh(3, 0.6, 3);
  const SpecialUnitary g = sample_su(3, 0.6, 4);
  const CMatrix ag = a.matrix() * g.matrix();
  EXPECT_LT(frobenius_distance(chi(a, g).matrix() * sigma(a, g).matrix(), ag), 1e-12);
  // sigma(a, g) = (g^-1 a^2 g)^{1/2}
  const CMatrix s = hermitian_sqrt(CMatrix(g.matrix().adjoint() * a.matrix() * a.matrix() * g.matrix())).matrix();
  EXPECT_LT(frobenius_distance(sigma(a, g).matrix(), s), 1e-12);
}

TEST(QuasiDoubleGroup, TrivialArguments) {
  const HermitianPD a = sample_sh(2, 0.6, 5);
  const HermitianPD e = HermitianPD::identity(2);
  const SpecialUnitary id = SpecialUnitary::identity(2);
  EXPECT_LT(frobenius_distance(alpha(a, e).matrix(), id.matrix()), 1e-13);
  EXPECT_LT(frobenius_distance(sigma(a, id).matrix(), a.matrix()), 1e-13);
  EXPECT_LT(frobenius_distance(chi(a, id).matrix(), id.matrix()), 1e-13);
  // Powers of one element commute, so alpha is trivial on them.
  EXPECT_LT(frobenius_distance(alpha(a, loop_power(a, 2)).matrix(), id.matrix()), 1e-12);
}

TEST(QuasiDoubleGroup, AlphaNontrivialForGenericPair) {
  const HermitianPD a = sample_sh(2, 0.6, 6), b = sample_sh(2, 0.6, 7);
  EXPECT_GT(frobenius_distance(alpha(a, b).matrix(), CMatrix::Identity(2, 2)), 1e-3);
}

TEST(QuasiDoubleGroup, NineIdentities) {
  for (int n : {2, 3}) {
    const auto d = identity_defects(sample_su(n, 0.5, 8), sample_su(n, 0.5, 9), sample_sh(n, 0.5, 10),
                                    sample_sh(n, 0.5, 11), sample_sh(n, 0.5, 12));
    ASSERT_EQ(d.size(), 9u);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_LT(d[i], 1e-11) << "identity " << i;
  }
}

TEST(QuasiDoubleGroup, AssociativityFailsWithoutTwist) {
  // m(m(a,b),c) = m(a, m(b,c)) is false; the twist by sigma(., alpha) is needed.
  const HermitianPD a = sample_sh(2, 0.8, 13), b = sample_sh(2, 0.8, 14), c = sample_sh(2, 0.8, 15);
  EXPECT_GT(frobenius_distance(loop_mul(loop_mul(a, b), c).matrix(), loop_mul(a, loop_mul(b, c)).matrix()), 1e-3);
  const CMatrix twisted = loop_mul(sigma(a, alpha(b, c)), loop_mul(b, c)).matrix();
  EXPECT_LT(frobenius_distance(loop_mul(loop_mul(a, b), c).matrix(), twisted), 1e-12);
}

TEST(QuasiDoubleGroup, Sweeps) {
  SweepOptions opt;
  opt.samples = 16;
  for (const auto& m : verify_decomposition(opt)) EXPECT_LT(m.stat.max, 1e-10) << m.id;
  for (const auto& m : verify_theorem1(opt)) EXPECT_LT(m.stat.max, 1e-9) << m.id;
  for (const auto& m : verify_corollary1(opt)) EXPECT_LT(m.stat.max, 1e-9) << m.id;
  EXPECT_EQ(verify_theorem1(opt).size(), 6u);
  EXPECT_EQ(verify_corollary1(opt).size(), 3u);
}
