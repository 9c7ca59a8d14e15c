#pragma once

// Dense complex matrix kernel for SL(n,C) and its polar factors SU(n), SH(n).
//
// Everything here is a pure function of its arguments. HermitianPD and
// SpecialUnitary are thin value wrappers whose constructors establish the
// invariants once; downstream code relies on them without rechecking.

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "lieloop/errors.hpp"

namespace lieloop {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct Tolerances {
  double sym = 1e-10;  // Hermiticity / unitarity residual
  double det = 1e-10;  // |det - 1|
  double mat = 1e-10;  // generic matrix identity residual
};

/// Hermitian positive definite matrix. Optionally unimodular (det = 1).
class HermitianPD {
 public:
  /// Validates Hermiticity (InvalidInput) and positivity (NotPositiveDefinite).
  /// When `unimodular` is set, |det - 1| must be within tol.det.
  explicit HermitianPD(const CMatrix& m, const Tolerances& tol = {}, bool unimodular = false);

  static HermitianPD identity(int n);

  /// Builds V diag(w) V^H from a unitary V and strictly positive w.
  static HermitianPD from_spectrum(const CMatrix& vectors, const Eigen::VectorXd& values);

  const CMatrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

 private:
  struct Trusted {};
  HermitianPD(CMatrix m, Trusted) : m_(std::move(m)) {}

  CMatrix m_;
};

/// Special unitary matrix: U^H U = I and det U = 1 within tolerance.
class SpecialUnitary {
 public:
  explicit SpecialUnitary(const CMatrix& m, const Tolerances& tol = {});

  static SpecialUnitary identity(int n);

  const CMatrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  SpecialUnitary inverse() const;

 private:
  struct Trusted {};
  SpecialUnitary(CMatrix m, Trusted) : m_(std::move(m)) {}

  CMatrix m_;
};

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;         // columns are orthonormal eigenvectors
};

/// Spectral decomposition of a Hermitian matrix. InvalidInput if not Hermitian.
HermitianEigen hermitian_eigen(const CMatrix& m, double sym_tol = 1e-10);

CMatrix dagger(const CMatrix& m);
double hermitian_residual(const CMatrix& m);
double unitary_residual(const CMatrix& m);
double frobenius_distance(const CMatrix& a, const CMatrix& b);
bool all_finite(const CMatrix& m);

/// Principal square root.
HermitianPD hermitian_sqrt(const HermitianPD& a);
/// Principal square root of a raw matrix; validates Hermitian positive definiteness.
HermitianPD hermitian_sqrt(const CMatrix& a, const Tolerances& tol = {});

/// Real power a^p through the spectrum (p may be negative or fractional).
HermitianPD hermitian_power(const HermitianPD& a, double p);

/// Scaling-and-squaring with a Taylor core.
CMatrix matrix_exp(const CMatrix& x);

/// Hermitian logarithm of an HPD matrix via its spectrum.
CMatrix matrix_log_hpd(const HermitianPD& a);

/// Anti-Hermitian logarithm of a unitary matrix with eigenangles in (-pi, pi].
CMatrix matrix_log_unitary(const CMatrix& u, double tol = 1e-9);

/// Logarithm of a matrix close to the identity (||m - I|| < 1/2) by the Mercator series.
CMatrix matrix_log_near_identity(const CMatrix& m);

struct PolarFactors {
  SpecialUnitary g;
  HermitianPD a;
};

/// d = g a with a = (d^H d)^{1/2}, g = d a^{-1}. Requires det d = 1 within tol.det.
PolarFactors polar_project(const CMatrix& d, const Tolerances& tol = {});

enum class SampleKind { SuN, ShN, SlNTangent };

/// Seeded sample. ShN: exp of a traceless Hermitian of Frobenius norm `scale`;
/// SuN: exp of i times such a matrix; SlNTangent: traceless complex matrix of norm `scale`.
CMatrix sample(SampleKind kind, int n, double scale, std::uint64_t seed);

HermitianPD sample_sh(int n, double scale, std::uint64_t seed);
SpecialUnitary sample_su(int n, double scale, std::uint64_t seed);

/// Traceless Hermitian matrix with unit Frobenius norm (zero if n == 1).
CMatrix random_traceless_hermitian(int n, std::mt19937_64& rng);

/// Stateless seed mixing so that sample streams do not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

}  // namespace lieloop
