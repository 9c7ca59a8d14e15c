#include <cmath>

#include <gtest/gtest.h>

#include "lieloop/quasi_double_algebra.hpp"

using namespace lieloop;

namespace {

const double r2 = std::sqrt(2.0);

// Full basis of sl(n,C) as a real algebra: eps_i = i e_i first, then e_i.
std::vector<CMatrix> full_basis(int n) {
  auto out = su_basis(n);
  for (const auto& e : sh_basis(n)) out.push_back(e);
  return out;
}

Vec coords(const CMatrix& m, int n) {
  const Vec a = su_coords(m), b = sh_coords(m);
  Vec out(a.size() + b.size());
  out << a, b;
  (void)n;
  return out;
}

}  // namespace

TEST(SlModel, Sl2CommutationTable) {
  // eps_1..3 -> 0..2, e_1..3 -> 3..5
  struct Rel {
    int a, b, c;
    double coef;
  };
  const Rel table[] = {{3, 4, 2, -r2}, {3, 5, 1, r2},  {4, 5, 0, -r2}, {0, 1, 2, r2},  {0, 2, 1, -r2},
                       {1, 2, 0, r2},  {3, 1, 5, r2},  {3, 2, 4, -r2}, {4, 0, 5, -r2}, {4, 2, 3, r2},
                       {5, 0, 4, r2},  {5, 1, 3, -r2}, {3, 0, 0, 0.0}, {4, 1, 0, 0.0}, {5, 2, 0, 0.0}};
  const QuasiDoubleAlgebra qd = sl_n_model(2);
  for (const auto& t : table)
    for (int k = 0; k < 6; ++k)
      EXPECT_NEAR(qd.bracket()(t.a, t.b, k), k == t.c ? t.coef : 0.0, 1e-15) << t.a << " " << t.b << " " << k;
}

TEST(SlModel, MatchesMatrixCommutators) {
  for (int n : {2, 3, 4}) {
    const auto basis = full_basis(n);
    const QuasiDoubleAlgebra qd = sl_n_model(n);
    ASSERT_EQ(qd.dim(), static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Vec want = coords(basis[i] * basis[j] - basis[j] * basis[i], n);
        Vec ei = Vec::Zero(qd.dim()), ej = Vec::Zero(qd.dim());
        ei[i] = ej[j] = 1.0;
        EXPECT_LT((qd.br(ei, ej) - want).cwiseAbs().maxCoeff(), 1e-13) << n;
      }
  }
}

TEST(SlModel, BasisIsOrthonormal) {
  for (int n : {2, 3}) {
    const auto e = sh_basis(n);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        EXPECT_NEAR((e[i] * e[j]).trace().real(), i == j ? 1.0 : 0.0, 1e-15);
  }
}

TEST(SlModel, SplitPieces) {
  const QuasiDoubleParts p = project_components(sl_n_model(2));
  EXPECT_EQ(p.mu.max_abs(), 0.0);
  EXPECT_NEAR(p.psi(0, 1, 2), -r2, 1e-15);   // [e1,e2] = -sqrt2 eps3
  EXPECT_NEAR(p.bracket_g1(0, 1, 2), r2, 1e-15);
}

TEST(SlModel, JacobiAndSplitIdentities) {
  for (int n : {2, 3}) {
    const QuasiDoubleAlgebra qd = sl_n_model(n);
    EXPECT_LT(jacobi_check(qd.bracket()), 1e-12);
    const auto t = verify_theorem3(qd);
    ASSERT_EQ(t.size(), 6u);
    for (const auto& m : t) EXPECT_LT(m.stat.max, 1e-12) << m.id;
  }
}

TEST(SplitIdentities, EquivalentToJacobi) {
  // A random bracket that keeps g1 closed: the split identities fail exactly when Jacobi does.
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  const QuasiDoubleAlgebra base = sl_n_model(2);
  for (int trial = 0; trial < 5; ++trial) {
    AntisymBilinearTensor b = base.bracket();
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
          if (!(i < 3 && j < 3 && k >= 3)) b.add(i, j, k, 0.05 * nd(rng));
    const QuasiDoubleAlgebra bad(3, 3, b);
    double worst = 0.0;
    for (const auto& m : verify_theorem3(bad)) worst = std::max(worst, m.stat.max);
    EXPECT_GT(jacobi_check(bad.bracket()), 1e-4);
    EXPECT_GT(worst, 1e-4);
  }
}

TEST(SplitIdentities, SurviveAdaptedBasisChange) {
  const QuasiDoubleAlgebra qd = sl_n_model(2);
  for (std::uint64_t s = 0; s < 4; ++s) {
    const QuasiDoubleAlgebra r = change_basis(qd, random_adapted_basis(3, 3, s));
    EXPECT_LT(jacobi_check(r.bracket()), 1e-10);
    for (const auto& m : verify_theorem3(r)) EXPECT_LT(m.stat.max, 1e-10) << m.id;
    EXPECT_GT(project_components(r).mu.max_abs(), 1e-3);  // the shear makes mu nonzero
  }
}

TEST(QuasiDoubleAlgebra, RejectsOpenG1) {
  AntisymBilinearTensor b(4, 4);
  b.set(0, 1, 3, 1.0);  // [g1, g1] leaks into g2
  EXPECT_THROW(QuasiDoubleAlgebra(2, 2, b), InvalidInput);
}

TEST(QuasiDoubleAlgebra, AssembleRoundTrip) {
  const QuasiDoubleAlgebra qd = sl_n_model(3);
  const QuasiDoubleAlgebra back = assemble_double(project_components(qd));
  EXPECT_EQ(back.bracket().tensor().data(), qd.bracket().tensor().data());
}

TEST(Akivis, IdentityHoldsOnSl2) {
  const AkivisAlgebra ak = akivis_from_quasi_double(sl_n_model(2));
  EXPECT_LT(ak.identity_defect(), 1e-14);
  Vec e1 = Vec::Zero(3), e2 = Vec::Zero(3), e3 = Vec::Zero(3);
  e1[0] = e2[1] = e3[2] = 1.0;
  EXPECT_LT(ak.triple_of(e1, e2, e3).norm(), 1e-15);
  // <e1, e1, e2> = 1/2 e1^psi(e1,e2) = 1/2 [e1, -sqrt2 eps3] = e2
  const Vec t = ak.triple_of(e1, e1, e2);
  EXPECT_NEAR(t[1], 1.0, 1e-14);
}

TEST(Akivis, IdentityHoldsAfterBasisChange) {
  const QuasiDoubleAlgebra r = change_basis(sl_n_model(2), random_adapted_basis(3, 3, 9));
  EXPECT_LT(akivis_from_quasi_double(r).identity_defect(), 1e-10);
}
