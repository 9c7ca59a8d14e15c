#include "lieloop/matrix_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace lieloop {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidInput(os.str());
  }
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

double one_norm(const CMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

Complex principal_root(Complex z, int n) {
  return std::pow(z, 1.0 / static_cast<double>(n));
}

CMatrix spectral_map(const HermitianEigen& eig, double (*f)(double)) {
  Eigen::VectorXd w = eig.values.unaryExpr(f);
  return eig.vectors * w.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

double hermitian_residual(const CMatrix& m) { return (m - m.adjoint()).norm(); }

double unitary_residual(const CMatrix& m) {
  return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).norm();
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

bool all_finite(const CMatrix& m) { return m.allFinite(); }

HermitianPD::HermitianPD(const CMatrix& m, const Tolerances& tol, bool unimodular) {
  require_square(m, "HermitianPD");
  if (!m.allFinite()) throw InvalidInput("HermitianPD: non-finite entries");
  const double res = hermitian_residual(m);
  if (res > tol.sym) {
    std::ostringstream os;
    os << "HermitianPD: matrix is not Hermitian (residual " << res << ")";
    throw InvalidInput(os.str());
  }
  m_ = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("HermitianPD: eigensolver failed");
  if (es.eigenvalues().minCoeff() <= 0.0) {
    std::ostringstream os;
    os << "HermitianPD: smallest eigenvalue " << es.eigenvalues().minCoeff() << " is not positive";
    throw NotPositiveDefinite(os.str());
  }
  if (unimodular) {
    const double det = es.eigenvalues().prod();
    if (std::abs(det - 1.0) > tol.det) {
      std::ostringstream os;
      os << "HermitianPD: determinant " << det << " differs from 1";
      throw InvalidInput(os.str());
    }
  }
}

HermitianPD HermitianPD::identity(int n) {
  if (n < 1) throw InvalidInput("HermitianPD::identity: n must be >= 1");
  return HermitianPD(CMatrix::Identity(n, n), Trusted{});
}

HermitianPD HermitianPD::from_spectrum(const CMatrix& vectors, const Eigen::VectorXd& values) {
  if (values.size() == 0 || vectors.rows() != values.size() || vectors.cols() != values.size())
    throw InvalidInput("HermitianPD::from_spectrum: shape mismatch");
  if (!(values.array() > 0.0).all())
    throw NotPositiveDefinite("HermitianPD::from_spectrum: non-positive eigenvalue");
  CMatrix m = vectors * values.asDiagonal() * vectors.adjoint();
  return HermitianPD(hermitian_part(m), Trusted{});
}

SpecialUnitary::SpecialUnitary(const CMatrix& m, const Tolerances& tol) {
  require_square(m, "SpecialUnitary");
  if (!m.allFinite()) throw InvalidInput("SpecialUnitary: non-finite entries");
  const double res = unitary_residual(m);
  if (res > tol.sym) {
    std::ostringstream os;
    os << "SpecialUnitary: matrix is not unitary (residual " << res << ")";
    throw InvalidInput(os.str());
  }
  const Complex det = m.determinant();
  if (std::abs(det - Complex(1.0, 0.0)) > tol.det) {
    std::ostringstream os;
    os << "SpecialUnitary: determinant " << det << " differs from 1";
    throw InvalidInput(os.str());
  }
  m_ = m;
}

SpecialUnitary SpecialUnitary::identity(int n) {
  if (n < 1) throw InvalidInput("SpecialUnitary::identity: n must be >= 1");
  return SpecialUnitary(CMatrix::Identity(n, n), Trusted{});
}

SpecialUnitary SpecialUnitary::inverse() const { return SpecialUnitary(m_.adjoint(), Trusted{}); }

HermitianEigen hermitian_eigen(const CMatrix& m, double sym_tol) {
  require_square(m, "hermitian_eigen");
  if (!m.allFinite()) throw InvalidInput("hermitian_eigen: non-finite entries");
  if (hermitian_residual(m) > sym_tol) throw InvalidInput("hermitian_eigen: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  if (es.info() != Eigen::Success) throw NumericalFailure("hermitian_eigen: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

HermitianPD hermitian_sqrt(const HermitianPD& a) {
  const HermitianEigen eig = hermitian_eigen(a.matrix());
  return HermitianPD::from_spectrum(eig.vectors, eig.values.cwiseSqrt());
}

HermitianPD hermitian_sqrt(const CMatrix& a, const Tolerances& tol) {
  return hermitian_sqrt(HermitianPD(a, tol));
}

HermitianPD hermitian_power(const HermitianPD& a, double p) {
  const HermitianEigen eig = hermitian_eigen(a.matrix());
  Eigen::VectorXd w = eig.values.unaryExpr([p](double v) { return std::pow(v, p); });
  return HermitianPD::from_spectrum(eig.vectors, w);
}

CMatrix matrix_exp(const CMatrix& x) {
  require_square(x, "matrix_exp");
  if (!x.allFinite()) throw InvalidInput("matrix_exp: non-finite entries");
  const int n = static_cast<int>(x.rows());
  const double norm = one_norm(x);
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  if (squarings > 60) throw NumericalFailure("matrix_exp: norm too large for scaling budget");
  const CMatrix scaled = x / std::ldexp(1.0, squarings);

  constexpr int kMaxTerms = 40;
  CMatrix sum = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (one_norm(term) <= 1e-18 * one_norm(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalFailure("matrix_exp: Taylor series did not converge");
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  if (!sum.allFinite()) throw NumericalFailure("matrix_exp: overflow");
  return sum;
}

CMatrix matrix_log_hpd(const HermitianPD& a) {
  const HermitianEigen eig = hermitian_eigen(a.matrix());
  return hermitian_part(spectral_map(eig, [](double v) { return std::log(v); }));
}

CMatrix matrix_log_unitary(const CMatrix& u, double tol) {
  require_square(u, "matrix_log_unitary");
  if (unitary_residual(u) > tol) throw InvalidInput("matrix_log_unitary: matrix is not unitary");
  Eigen::ComplexSchur<CMatrix> schur(u);
  if (schur.info() != Eigen::Success) throw NumericalFailure("matrix_log_unitary: Schur failed");
  const CMatrix& t = schur.matrixT();
  const CMatrix& q = schur.matrixU();
  const int n = static_cast<int>(u.rows());
  // A normal matrix has a diagonal Schur form.
  CMatrix strict = t.triangularView<Eigen::StrictlyUpper>();
  if (strict.norm() > tol) throw NumericalFailure("matrix_log_unitary: Schur form not diagonal");
  Eigen::VectorXcd logs(n);
  for (int i = 0; i < n; ++i) logs(i) = Complex(0.0, std::arg(t(i, i)));
  CMatrix l = q * logs.asDiagonal() * q.adjoint();
  return 0.5 * (l - l.adjoint());
}

CMatrix matrix_log_near_identity(const CMatrix& m) {
  require_square(m, "matrix_log_near_identity");
  const int n = static_cast<int>(m.rows());
  const CMatrix a = m - CMatrix::Identity(n, n);
  if (one_norm(a) >= 0.5) throw InvalidInput("matrix_log_near_identity: matrix too far from identity");
  CMatrix sum = CMatrix::Zero(n, n);
  CMatrix power = CMatrix::Identity(n, n);
  for (int k = 1; k <= 80; ++k) {
    power = power * a;
    const CMatrix term = power / static_cast<double>(k);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
    if (one_norm(term) < 1e-18) return sum;
  }
  throw NumericalFailure("matrix_log_near_identity: series did not converge");
}

PolarFactors polar_project(const CMatrix& d, const Tolerances& tol) {
  require_square(d, "polar_project");
  if (!d.allFinite()) throw InvalidInput("polar_project: non-finite entries");
  const Complex det = d.determinant();
  if (std::abs(det - Complex(1.0, 0.0)) > tol.det) {
    std::ostringstream os;
    os << "polar_project: determinant " << det << " differs from 1";
    throw InvalidInput(os.str());
  }
  const HermitianEigen eig = hermitian_eigen(hermitian_part(d.adjoint() * d), tol.sym);
  const double lo = eig.values.minCoeff();
  const double hi = eig.values.maxCoeff();
  if (!(lo > 0.0) || lo < 1e-14 * hi) throw NumericalFailure("polar_project: ill-conditioned factor");
  const HermitianPD a = HermitianPD::from_spectrum(eig.vectors, eig.values.cwiseSqrt());
  const HermitianPD a_inv = HermitianPD::from_spectrum(eig.vectors, eig.values.cwiseSqrt().cwiseInverse());
  const CMatrix g = d * a_inv.matrix();
  try {
    return {SpecialUnitary(g, tol), a};
  } catch (const InvalidInput& e) {
    throw NumericalFailure(std::string("polar_project: unitary factor failed validation: ") + e.what());
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return splitmix(splitmix(splitmix(base) ^ stream) ^ index);
}

CMatrix random_traceless_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  CMatrix h = hermitian_part(z);
  h -= (h.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
  const double norm = h.norm();
  if (norm == 0.0) return CMatrix::Zero(n, n);
  return h / norm;
}

CMatrix sample(SampleKind kind, int n, double scale, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("sample: n must be >= 2");
  if (!(scale >= 0.0) || !std::isfinite(scale)) throw InvalidInput("sample: scale must be >= 0");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case SampleKind::ShN:
      return sample_sh(n, scale, seed).matrix();
    case SampleKind::SuN:
      return sample_su(n, scale, seed).matrix();
    case SampleKind::SlNTangent: {
      std::normal_distribution<double> normal(0.0, 1.0);
      CMatrix z(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) z(i, j) = Complex(normal(rng), normal(rng));
      z -= (z.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
      return scale * z / z.norm();
    }
  }
  throw InvalidInput("sample: unknown kind");
}

HermitianPD sample_sh(int n, double scale, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("sample_sh: n must be >= 2");
  std::mt19937_64 rng(seed);
  const CMatrix x = scale * random_traceless_hermitian(n, rng);
  const HermitianEigen eig = hermitian_eigen(x);
  Eigen::VectorXd w = eig.values.array().exp();
  // Renormalize so that the determinant is 1 to rounding.
  w /= std::exp(std::log(w.prod()) / static_cast<double>(n));
  return HermitianPD::from_spectrum(eig.vectors, w);
}

SpecialUnitary sample_su(int n, double scale, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("sample_su: n must be >= 2");
  std::mt19937_64 rng(seed);
  const CMatrix x = scale * random_traceless_hermitian(n, rng);
  const HermitianEigen eig = hermitian_eigen(x);
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, eig.values(i));
  CMatrix u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  u /= principal_root(u.determinant(), n);
  return SpecialUnitary(u);
}

}  // namespace lieloop
