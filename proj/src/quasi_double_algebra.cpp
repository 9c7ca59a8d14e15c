#include "lieloop/quasi_double_algebra.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lieloop {

namespace {

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v[i] = 1.0;
  return v;
}

double inf_norm(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Round-off below this is treated as an exact structural zero in computed constants.
constexpr double kSnap = 1e-14;

double snap(double v) { return std::abs(v) < kSnap ? 0.0 : v; }

}  // namespace

QuasiDoubleAlgebra::QuasiDoubleAlgebra(int dim1, int dim2, AntisymBilinearTensor bracket,
                                       double closure_tol)
    : dim1_(dim1), dim2_(dim2), bracket_(std::move(bracket)) {
  if (dim1 < 0 || dim2 < 0 || dim1 + dim2 == 0) throw InvalidInput("QuasiDoubleAlgebra: bad dimensions");
  if (bracket_.dim_in() != dim1 + dim2 || bracket_.dim_out() != dim1 + dim2) {
    std::ostringstream os;
    os << "QuasiDoubleAlgebra: bracket has shape " << bracket_.dim_in() << "x" << bracket_.dim_in()
       << "->" << bracket_.dim_out() << ", expected " << dim1 + dim2;
    throw InvalidInput(os.str());
  }
  for (int i = 0; i < dim1; ++i)
    for (int j = 0; j < dim1; ++j)
      for (int k = dim1; k < dim1 + dim2; ++k)
        if (std::abs(bracket_(i, j, k)) > closure_tol) {
          std::ostringstream os;
          os << "QuasiDoubleAlgebra: g1 is not a subalgebra, [b" << i << ",b" << j
             << "] has component " << bracket_(i, j, k) << " on g2 index " << k;
          throw InvalidInput(os.str());
        }
}

QuasiDoubleParts project_components(const QuasiDoubleAlgebra& qd) {
  const int d1 = qd.dim1(), d2 = qd.dim2();
  const auto& b = qd.bracket();
  QuasiDoubleParts p;
  p.dim1 = d1;
  p.dim2 = d2;
  p.bracket_g1 = AntisymBilinearTensor(d1, d1);
  p.psi = AntisymBilinearTensor(d2, d1);
  p.mu = AntisymBilinearTensor(d2, d2);
  p.act = Tensor3(d2, d1, d2);
  p.coact = Tensor3(d2, d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = i + 1; j < d1; ++j)
      for (int k = 0; k < d1; ++k) p.bracket_g1.set(i, j, k, b(i, j, k));
  for (int a = 0; a < d2; ++a)
    for (int c = a + 1; c < d2; ++c) {
      for (int k = 0; k < d1; ++k) p.psi.set(a, c, k, b(d1 + a, d1 + c, k));
      for (int k = 0; k < d2; ++k) p.mu.set(a, c, k, b(d1 + a, d1 + c, d1 + k));
    }
  for (int a = 0; a < d2; ++a)
    for (int i = 0; i < d1; ++i) {
      for (int k = 0; k < d2; ++k) p.act(a, i, k) = b(d1 + a, i, d1 + k);
      for (int k = 0; k < d1; ++k) p.coact(a, i, k) = b(d1 + a, i, k);
    }
  return p;
}

QuasiDoubleAlgebra assemble_double(const QuasiDoubleParts& p) {
  const int d1 = p.dim1, d2 = p.dim2;
  const auto bad = [](const char* what) {
    throw InvalidInput(std::string("assemble_double: shape mismatch in ") + what);
  };
  if (p.bracket_g1.dim_in() != d1 || p.bracket_g1.dim_out() != d1) bad("bracket_g1");
  if (p.psi.dim_in() != d2 || p.psi.dim_out() != d1) bad("psi");
  if (p.mu.dim_in() != d2 || p.mu.dim_out() != d2) bad("mu");
  if (p.act.dim(0) != d2 || p.act.dim(1) != d1 || p.act.dim(2) != d2) bad("act");
  if (p.coact.dim(0) != d2 || p.coact.dim(1) != d1 || p.coact.dim(2) != d1) bad("coact");
  const int n = d1 + d2;
  AntisymBilinearTensor b(n, n);
  for (int i = 0; i < d1; ++i)
    for (int j = i + 1; j < d1; ++j)
      for (int k = 0; k < d1; ++k) b.set(i, j, k, p.bracket_g1(i, j, k));
  for (int a = 0; a < d2; ++a)
    for (int c = a + 1; c < d2; ++c) {
      for (int k = 0; k < d1; ++k) b.set(d1 + a, d1 + c, k, p.psi(a, c, k));
      for (int k = 0; k < d2; ++k) b.set(d1 + a, d1 + c, d1 + k, p.mu(a, c, k));
    }
  for (int a = 0; a < d2; ++a)
    for (int i = 0; i < d1; ++i) {
      for (int k = 0; k < d1; ++k) b.set(d1 + a, i, k, p.coact(a, i, k));
      for (int k = 0; k < d2; ++k) b.set(d1 + a, i, d1 + k, p.act(a, i, k));
    }
  return QuasiDoubleAlgebra(d1, d2, std::move(b));
}

double jacobi_check(const AntisymBilinearTensor& bracket) {
  const int n = bracket.dim_in();
  if (bracket.dim_out() != n) throw InvalidInput("jacobi_check: bracket must map into its own space");
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
        const Vec s = bracket.apply(bracket.apply(x, y), z) + bracket.apply(bracket.apply(y, z), x) +
                      bracket.apply(bracket.apply(z, x), y);
        worst = std::max(worst, inf_norm(s));
      }
  return worst;
}

std::vector<Measurement> verify_theorem3(const QuasiDoubleAlgebra& qd) {
  const QuasiDoubleParts p = project_components(qd);
  const int d1 = p.dim1, d2 = p.dim2;
  std::vector<Measurement> out = {
      {"split.coact_bracket", "(xi,eta)^x = (xi^x,eta) + (xi,eta^x) - xi^(x^eta) + eta^(x^xi)   [g1 part]", {}, 0},
      {"split.act_bracket", "x^[xi,eta] = (x^xi)^eta - (x^eta)^xi", {}, 0},
      {"split.mu_act", "mu(x,y)^xi = mu(x^xi,y) + mu(x,y^xi) + x^(xi^y) - y^(xi^x)", {}, 0},
      {"split.coact_mu", "xi^mu(x,y) = (xi^y)^x - (xi^x)^y + [xi,psi(x,y)] + psi(x^xi,y) + psi(x,y^xi)", {}, 0},
      {"split.mu_jacobiator", "sum_cyc mu(mu(x,y),z) = sum_cyc x^psi(y,z)", {}, 0},
      {"split.psi_closed", "sum_cyc psi(mu(x,y),z) = sum_cyc psi(x,y)^z", {}, 0},
  };
  for (int a = 0; a < d2; ++a) {
    const Vec x = unit(d2, a);
    for (int i = 0; i < d1; ++i) {
      const Vec xi = unit(d1, i);
      for (int j = 0; j < d1; ++j) {
        const Vec eta = unit(d1, j);
        const Vec bxe = p.br1(xi, eta);
        const Vec r1 = p.coact_of(x, bxe) - p.br1(p.coact_of(x, xi), eta) -
                       p.br1(xi, p.coact_of(x, eta)) + p.coact_of(p.act_of(x, eta), xi) -
                       p.coact_of(p.act_of(x, xi), eta);
        const Vec r2 = p.act_of(x, bxe) - p.act_of(p.act_of(x, xi), eta) + p.act_of(p.act_of(x, eta), xi);
        out[0].stat.add(inf_norm(r1));
        out[1].stat.add(inf_norm(r2));
      }
      for (int c = 0; c < d2; ++c) {
        const Vec y = unit(d2, c);
        const Vec m = p.mu_of(x, y);
        const Vec r3 = p.act_of(m, xi) - p.mu_of(p.act_of(x, xi), y) - p.mu_of(x, p.act_of(y, xi)) -
                       p.act_of(x, p.coact_of(y, xi)) + p.act_of(y, p.coact_of(x, xi));
        const Vec r4 = p.coact_of(m, xi) - p.coact_of(x, p.coact_of(y, xi)) +
                       p.coact_of(y, p.coact_of(x, xi)) - p.br1(xi, p.psi_of(x, y)) -
                       p.psi_of(p.act_of(x, xi), y) - p.psi_of(x, p.act_of(y, xi));
        out[2].stat.add(inf_norm(r3));
        out[3].stat.add(inf_norm(r4));
      }
    }
  }
  for (int a = 0; a < d2; ++a)
    for (int c = 0; c < d2; ++c)
      for (int e = 0; e < d2; ++e) {
        const Vec x = unit(d2, a), y = unit(d2, c), z = unit(d2, e);
        const Vec r5 = p.mu_of(p.mu_of(x, y), z) + p.mu_of(p.mu_of(y, z), x) + p.mu_of(p.mu_of(z, x), y) -
                       p.act_of(x, p.psi_of(y, z)) - p.act_of(y, p.psi_of(z, x)) - p.act_of(z, p.psi_of(x, y));
        const Vec r6 = p.psi_of(p.mu_of(x, y), z) + p.psi_of(p.mu_of(y, z), x) + p.psi_of(p.mu_of(z, x), y) -
                       p.coact_of(z, p.psi_of(x, y)) - p.coact_of(x, p.psi_of(y, z)) -
                       p.coact_of(y, p.psi_of(z, x));
        out[4].stat.add(inf_norm(r5));
        out[5].stat.add(inf_norm(r6));
      }
  return out;
}

Vec AkivisAlgebra::triple_of(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const double w = x[i] * y[j] * z[k];
        if (w == 0.0) continue;
        for (int l = 0; l < dim; ++l) out[l] += w * triple(i, j, k, l);
      }
  return out;
}

double AkivisAlgebra::identity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Vec x = unit(dim, i), y = unit(dim, j), z = unit(dim, k);
        const Vec alt = triple_of(x, y, z) + triple_of(y, z, x) + triple_of(z, x, y) -
                        triple_of(y, x, z) - triple_of(x, z, y) - triple_of(z, y, x);
        const Vec cyc = bracket.apply(bracket.apply(x, y), z) + bracket.apply(bracket.apply(y, z), x) +
                        bracket.apply(bracket.apply(z, x), y);
        worst = std::max(worst, inf_norm(alt - cyc));
      }
  return worst;
}

AkivisAlgebra akivis_from_quasi_double(const QuasiDoubleAlgebra& qd) {
  const QuasiDoubleParts p = project_components(qd);
  const int n = p.dim2;
  AkivisAlgebra ak;
  ak.dim = n;
  ak.bracket = p.mu;
  ak.triple = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec t = 0.5 * p.act_of(unit(n, i), p.psi_of(unit(n, j), unit(n, k)));
        for (int l = 0; l < n; ++l) ak.triple(i, j, k, l) = t[l];
      }
  return ak;
}

std::vector<CMatrix> sh_basis(int n) {
  if (n < 2) throw InvalidInput("sh_basis: n must be >= 2");
  const double r = 1.0 / std::sqrt(2.0);
  const Complex I(0.0, 1.0);
  std::vector<CMatrix> out;
  if (n == 2) {
    CMatrix e1(2, 2), e2(2, 2), e3(2, 2);
    e1 << r, 0, 0, -r;
    e2 << 0, r, r, 0;
    e3 << 0, I * r, -I * r, 0;
    return {e1, e2, e3};
  }
  for (int k = 1; k < n; ++k) {
    CMatrix d = CMatrix::Zero(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) d(i, i) = s;
    d(k, k) = -k * s;
    out.push_back(d);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      CMatrix s = CMatrix::Zero(n, n), a = CMatrix::Zero(n, n);
      s(j, k) = s(k, j) = r;
      a(j, k) = I * r;
      a(k, j) = -I * r;
      out.push_back(s);
      out.push_back(a);
    }
  return out;
}

std::vector<CMatrix> su_basis(int n) {
  std::vector<CMatrix> out = sh_basis(n);
  for (auto& b : out) b *= Complex(0.0, 1.0);
  return out;
}

Vec sh_coords(const CMatrix& m) {
  const auto basis = sh_basis(static_cast<int>(m.rows()));
  Vec c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c[i] = (m * basis[i]).trace().real();
  return c;
}

Vec su_coords(const CMatrix& m) {
  const auto basis = sh_basis(static_cast<int>(m.rows()));
  Vec c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c[i] = (m * basis[i]).trace().imag();
  return c;
}

CMatrix from_sh_coords(const Vec& c, int n) {
  const auto basis = sh_basis(n);
  if (c.size() != static_cast<Eigen::Index>(basis.size())) throw InvalidInput("from_sh_coords: wrong length");
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) m += c[i] * basis[i];
  return m;
}

CMatrix from_su_coords(const Vec& c, int n) {
  return Complex(0.0, 1.0) * from_sh_coords(c, n);
}

QuasiDoubleAlgebra sl_n_model(int n) {
  if (n < 2 || n > 4) {
    std::ostringstream os;
    os << "sl_n_model: n = " << n << " not in {2, 3, 4}";
    throw InvalidInput(os.str());
  }
  std::vector<CMatrix> basis = su_basis(n);
  const std::vector<CMatrix> sh = sh_basis(n);
  basis.insert(basis.end(), sh.begin(), sh.end());
  const int d = static_cast<int>(sh.size());
  AntisymBilinearTensor b(2 * d, 2 * d);
  for (int i = 0; i < 2 * d; ++i)
    for (int j = i + 1; j < 2 * d; ++j) {
      const CMatrix c = basis[i] * basis[j] - basis[j] * basis[i];
      const Vec cu = su_coords(c), ch = sh_coords(c);
      for (int k = 0; k < d; ++k) {
        b.set(i, j, k, snap(cu[k]));
        b.set(i, j, d + k, snap(ch[k]));
      }
    }
  return QuasiDoubleAlgebra(d, d, std::move(b));
}

QuasiDoubleAlgebra change_basis(const QuasiDoubleAlgebra& qd, const Eigen::MatrixXd& B) {
  const int d1 = qd.dim1(), d2 = qd.dim2(), n = qd.dim();
  if (B.rows() != n || B.cols() != n) throw InvalidInput("change_basis: B has wrong shape");
  if (d1 > 0 && d2 > 0 && B.topRightCorner(d1, d2).cwiseAbs().maxCoeff() != 0.0)
    throw InvalidInput("change_basis: B must map g1 into g1");
  // Block inverse keeps the structural zero block exact.
  Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd i11 = d1 ? Eigen::MatrixXd(B.topLeftCorner(d1, d1).inverse()) : Eigen::MatrixXd();
  const Eigen::MatrixXd i22 = d2 ? Eigen::MatrixXd(B.bottomRightCorner(d2, d2).inverse()) : Eigen::MatrixXd();
  if (d1) inv.topLeftCorner(d1, d1) = i11;
  if (d2) inv.bottomRightCorner(d2, d2) = i22;
  if (d1 && d2) inv.bottomLeftCorner(d2, d1) = -i22 * B.bottomLeftCorner(d2, d1) * i11;
  AntisymBilinearTensor out(n, n);
  const auto& c = qd.bracket();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec w = Vec::Zero(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double s = B(a, i) * B(b, j);
          if (s == 0.0) continue;
          for (int k = 0; k < n; ++k) w[k] += s * c(i, j, k);
        }
      const Vec v = inv.transpose() * w;
      for (int k = 0; k < n; ++k) out.set(a, b, k, v[k]);
    }
  // g1 closure is exact by construction; clear round-off in the zero block.
  AntisymBilinearTensor clean(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const bool zero_block = a < d1 && b < d1 && k >= d1;
        clean.set(a, b, k, zero_block ? 0.0 : out(a, b, k));
      }
  return QuasiDoubleAlgebra(d1, d2, std::move(clean), 1e-9);
}

Eigen::MatrixXd random_adapted_basis(int dim1, int dim2, std::uint64_t seed, double shear) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  const int n = dim1 + dim2;
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n, n);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      const bool upper = a < dim1 && i >= dim1;
      if (upper) continue;
      const bool off = (a < dim1) != (i < dim1);
      B(a, i) += (off ? shear : 0.3) * g(rng);
    }
  return B;
}

}  // namespace lieloop
