#include <cmath>

#include <gtest/gtest.h>

#include "lieloop/matrix_core.hpp"

using namespace lieloop;

namespace {

const Complex I(0.0, 1.0);

CMatrix pauli(int k) {
  CMatrix s(2, 2);
  if (k == 1) s << 0, 1, 1, 0;
  if (k == 2) s << 0, -I, I, 0;
  if (k == 3) s << 1, 0, 0, -1;
  return s;
}

// Plain Taylor sum with many terms; only valid for small norms.
CMatrix taylor_exp(const CMatrix& x) {
  CMatrix out = CMatrix::Identity(x.rows(), x.cols());
  CMatrix term = out;
  for (int k = 1; k < 40; ++k) {
    term = (term * x / static_cast<double>(k)).eval();
    out += term;
  }
  return out;
}

}  // namespace

TEST(MatrixExp, SuTwoClosedForm) {
  // exp(i t n.sigma) = cos t + i sin t n.sigma
  const double t = 0.7;
  const double nx = 0.6, ny = 0.0, nz = 0.8;
  const CMatrix ns = nx * pauli(1) + ny * pauli(2) + nz * pauli(3);
  const CMatrix want = std::cos(t) * CMatrix::Identity(2, 2) + I * std::sin(t) * ns;
  EXPECT_LT(frobenius_distance(matrix_exp(I * t * ns), want), 1e-14);
}

TEST(MatrixExp, AgreesWithTaylorSum) {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4}) {
    const CMatrix x = 0.8 * random_traceless_hermitian(n, rng) + 0.5 * I * random_traceless_hermitian(n, rng);
    EXPECT_LT(frobenius_distance(matrix_exp(x), taylor_exp(x)), 1e-13) << n;
  }
}

TEST(MatrixExp, LargeNormHermitianMatchesSpectrum) {
  std::mt19937_64 rng(4);
  const CMatrix x = 6.0 * random_traceless_hermitian(3, rng);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(x);
  const CMatrix want = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
                       es.eigenvectors().adjoint();
  EXPECT_LT(frobenius_distance(matrix_exp(x), want) / want.norm(), 1e-13);
}

TEST(MatrixLog, InvertsExpOnHermitianAndUnitary) {
  std::mt19937_64 rng(5);
  for (int n : {2, 3}) {
    const CMatrix x = random_traceless_hermitian(n, rng);
    EXPECT_LT(frobenius_distance(matrix_log_hpd(HermitianPD(matrix_exp(x))), x), 1e-13);
    const CMatrix xi = 1.3 * I * random_traceless_hermitian(n, rng);
    EXPECT_LT(frobenius_distance(matrix_log_unitary(matrix_exp(xi)), xi), 1e-12);
    const CMatrix small = 0.05 * x + 0.02 * xi;
    EXPECT_LT(frobenius_distance(matrix_log_near_identity(matrix_exp(small)), small), 1e-14);
  }
}

TEST(MatrixLog, NearIdentityRejectsFarMatrices) {
  EXPECT_THROW(matrix_log_near_identity(3.0 * CMatrix::Identity(2, 2)), InvalidInput);
}

TEST(HermitianSqrt, TwoByTwoClosedForm) {
  // sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)) for 2x2 HPD M.
  CMatrix m(2, 2);
  m << 3.0, Complex(1.0, -0.5), Complex(1.0, 0.5), 2.0;
  const double s = std::sqrt(m.determinant().real());
  const CMatrix want = (m + s * CMatrix::Identity(2, 2)) / std::sqrt(m.trace().real() + 2 * s);
  EXPECT_LT(frobenius_distance(hermitian_sqrt(m).matrix(), want), 1e-14);
}

TEST(HermitianSqrt, SquaresBackAndPowersCompose) {
  const HermitianPD a = sample_sh(3, 1.0, 9);
  const CMatrix r = hermitian_sqrt(a).matrix();
  EXPECT_LT(frobenius_distance(r * r, a.matrix()), 1e-13);
  const CMatrix p = hermitian_power(a, -1.5).matrix() * hermitian_power(a, 1.5).matrix();
  EXPECT_LT(frobenius_distance(p, CMatrix::Identity(3, 3)), 1e-13);
}

TEST(HermitianPD, RejectsInvalidMatrices) {
  CMatrix nonherm(2, 2);
  nonherm << 1, 1, 0, 1;
  EXPECT_THROW(HermitianPD{nonherm}, InvalidInput);
  CMatrix indefinite(2, 2);
  indefinite << 1, 0, 0, -1;
  EXPECT_THROW(HermitianPD{indefinite}, NotPositiveDefinite);
  EXPECT_THROW(HermitianPD(2.0 * CMatrix::Identity(2, 2), Tolerances{}, true), InvalidInput);
  EXPECT_THROW(SpecialUnitary(2.0 * CMatrix::Identity(2, 2)), InvalidInput);
}

TEST(PolarProject, RecoversFactors) {
  for (int n : {2, 3, 4}) {
    const SpecialUnitary g = sample_su(n, 0.8, 11);
    const HermitianPD a = sample_sh(n, 0.8, 12);
    const PolarFactors f = polar_project(g.matrix() * a.matrix());
    EXPECT_LT(frobenius_distance(f.g.matrix(), g.matrix()), 1e-12);
    EXPECT_LT(frobenius_distance(f.a.matrix(), a.matrix()), 1e-12);
  }
}

TEST(PolarProject, RejectsWrongDeterminant) {
  EXPECT_THROW(polar_project(2.0 * CMatrix::Identity(2, 2)), InvalidInput);
}

TEST(Sampling, DeterministicAndInGroup) {
  const HermitianPD a1 = sample_sh(3, 0.3, 42), a2 = sample_sh(3, 0.3, 42);
  EXPECT_EQ(a1.matrix(), a2.matrix());
  EXPECT_NEAR(std::abs(a1.matrix().determinant() - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(matrix_log_hpd(a1).norm(), 0.3, 1e-12);
  const SpecialUnitary g = sample_su(3, 0.3, 42);
  EXPECT_LT(unitary_residual(g.matrix()), 1e-13);
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}
