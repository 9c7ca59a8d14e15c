#include "lieloop/quasi_poisson.hpp"

#include <cmath>
#include <sstream>

#include "lieloop/finite_difference.hpp"
#include "lieloop/lie_loop.hpp"
#include "lieloop/quasi_double_group.hpp"

namespace lieloop {

namespace {

const Tolerances kProductTol{1e-8, 1e-8, 1e-8};

HermitianPD point_of(const Vec3& c) {
  return HermitianPD(matrix_exp(from_sh_coords(Vec(c), 2)), kProductTol);
}

Vec3 chart_of(const HermitianPD& a) { return Vec3(sh_coords(matrix_log_hpd(a))); }

HermitianPD exp_sh(const CMatrix& x) { return HermitianPD(matrix_exp(x), kProductTol); }

SpecialUnitary exp_su(const CMatrix& xi) {
  // Project onto traceless anti-Hermitian first: numerically differentiated tangents drift.
  CMatrix k = 0.5 * (xi - xi.adjoint());
  k -= (k.trace() / static_cast<double>(k.rows())) * CMatrix::Identity(k.rows(), k.cols());
  return SpecialUnitary(matrix_exp(k), kProductTol);
}

Vec3 d_dt(const std::function<Vec3(double)>& f, double h) {
  return fd::central_derivative([&](double t) -> Vec3 { return f(t); }, 1, h, 5);
}

CMatrix d_dt_matrix(const std::function<CMatrix(double)>& f, double h) {
  return fd::central_derivative([&](double t) -> CMatrix { return f(t); }, 1, h, 5);
}

Vec3 unit3(int i) {
  Vec3 v = Vec3::Zero();
  v[i] = 1.0;
  return v;
}

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

double radical_inverse(int i, int base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

// Coordinates of psi(x, y) in su(2) and of mu(x, y) in sh(2), from the tangent bialgebra.
struct Sh2Constants {
  BialgebraSpec spec = sh2_bialgebra();
  Vec3 psi_of(int i, int j) const {
    Vec3 v;
    for (int k = 0; k < 3; ++k) v[k] = spec.psi(i, j, k);
    return v;
  }
  Vec3 mu_of(int i, int j) const {
    Vec3 v;
    for (int k = 0; k < 3; ++k) v[k] = spec.mu(i, j, k);
    return v;
  }
  Vec3 su_bracket(int i, int j) const {
    Vec3 v;
    for (int k = 0; k < 3; ++k) v[k] = spec.gamma(k, i, j);
    return v;
  }
};

}  // namespace

HermitianPD chart_to_point(const Vec3& c, double radius) {
  if (!c.allFinite() || c.norm() > radius) {
    std::ostringstream os;
    os << "chart_to_point: |c| = " << c.norm() << " exceeds chart radius " << radius;
    throw InvalidInput(os.str());
  }
  return point_of(c);
}

Vec3 point_to_chart(const HermitianPD& a, double radius) {
  if (a.dim() != 2) throw InvalidInput("point_to_chart: expected a 2x2 matrix");
  const Vec3 c = chart_of(a);
  if (c.norm() > radius) {
    std::ostringstream os;
    os << "point_to_chart: point lies at chart radius " << c.norm() << " > " << radius;
    throw InvalidInput(os.str());
  }
  return c;
}

VectorFieldModel translated_field(const Vec3& x, const FieldOptions& opt) {
  const CMatrix X = from_sh_coords(Vec(x), 2);
  const double h = opt.hv;
  return [X, h](const Vec3& c) -> Vec3 {
    const HermitianPD a = point_of(c);
    return d_dt([&](double t) { return chart_of(loop_mul(a, exp_sh(CMatrix(t * X)))); }, h);
  };
}

VectorFieldModel action_field(const Vec3& xi, const FieldOptions& opt) {
  const CMatrix XI = from_su_coords(Vec(xi), 2);
  const double h = opt.hv;
  return [XI, h](const Vec3& c) -> Vec3 {
    const HermitianPD a = point_of(c);
    return d_dt([&](double t) { return chart_of(sigma(a, exp_su(CMatrix(t * XI)))); }, h);
  };
}

Mat3 wedge(const Vec3& u, const Vec3& v) { return u * v.transpose() - v * u.transpose(); }

Tensor3 wedge3(const Vec3& u, const Vec3& v, const Vec3& w) {
  Tensor3 t(3, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        t(i, j, k) = u[i] * (v[j] * w[k] - v[k] * w[j]) - u[j] * (v[i] * w[k] - v[k] * w[i]) +
                     u[k] * (v[i] * w[j] - v[j] * w[i]);
  return t;
}

BivectorFieldModel bivector_P(const FieldOptions& opt) {
  std::array<VectorFieldModel, 3> X, R;
  for (int i = 0; i < 3; ++i) {
    X[i] = translated_field(unit3(i), opt);
    R[i] = action_field(unit3(i), opt);
  }
  return [X, R](const Vec3& c) -> Mat3 {
    Mat3 p = Mat3::Zero();
    for (int i = 0; i < 3; ++i) p += 0.5 * wedge(X[i](c), R[i](c));
    return p;
  };
}

std::array<Vec3, 3> gradient(const VectorFieldModel& f, const Vec3& c, double h) {
  std::array<Vec3, 3> g;
  for (int l = 0; l < 3; ++l) g[l] = d_dt([&](double t) { return f(c + t * unit3(l)); }, h);
  return g;
}

std::array<Mat3, 3> gradient(const BivectorFieldModel& f, const Vec3& c, double h) {
  std::array<Mat3, 3> g;
  for (int l = 0; l < 3; ++l)
    g[l] = fd::central_derivative([&](double t) -> Mat3 { return f(c + t * unit3(l)); }, 1, h, 5);
  return g;
}

Vec3 field_bracket(const VectorFieldModel& X, const VectorFieldModel& Y, const Vec3& c, double h) {
  const Vec3 x = X(c), y = Y(c);
  const auto dx = gradient(X, c, h), dy = gradient(Y, c, h);
  Vec3 out = Vec3::Zero();
  for (int l = 0; l < 3; ++l) out += x[l] * dy[l] - y[l] * dx[l];
  return out;
}

Mat3 lie_derivative_biv(const VectorFieldModel& X, const BivectorFieldModel& P, const Vec3& c, double h) {
  const Vec3 x = X(c);
  const Mat3 p = P(c);
  const auto dx = gradient(X, c, h);
  const auto dp = gradient(P, c, h);
  Mat3 L = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) L(i, j) += x[l] * dp[l](i, j) - p(l, j) * dx[l][i] - p(i, l) * dx[l][j];
  return 0.5 * (L - L.transpose());
}

Tensor3 schouten_PP(const BivectorFieldModel& P, const Vec3& c, double h) {
  const Mat3 p = P(c);
  const auto dp = gradient(P, c, h);
  Tensor3 s(3, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double v = 0.0;
        for (int l = 0; l < 3; ++l) v += p(l, i) * dp[l](j, k) + p(l, j) * dp[l](k, i) + p(l, k) * dp[l](i, j);
        s(i, j, k) = 2.0 * v;
      }
  return s;
}

Mat3 wedge2_rho(const Eigen::Matrix3d& B, const Vec3& c, const FieldOptions& opt) {
  std::array<Vec3, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = action_field(unit3(i), opt)(c);
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (B(i, j) != 0.0) out += 0.5 * B(i, j) * wedge(r[i], r[j]);
  return out;
}

Tensor3 wedge3_rho(const Trivector& psi, const Vec3& c, const FieldOptions& opt) {
  std::array<Vec3, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = action_field(unit3(i), opt)(c);
  Tensor3 out(3, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (psi(i, j, k) == 0.0) continue;
        const Tensor3 w = wedge3(r[i], r[j], r[k]);
        for (std::size_t q = 0; q < out.data().size(); ++q) out.data()[q] += psi(i, j, k) / 6.0 * w.data()[q];
      }
  return out;
}

Mat3 translated_bivector(const Eigen::Matrix3d& W, const Vec3& c, const FieldOptions& opt) {
  std::array<Vec3, 3> x;
  for (int i = 0; i < 3; ++i) x[i] = translated_field(unit3(i), opt)(c);
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (W(i, j) != 0.0) out += 0.5 * W(i, j) * wedge(x[i], x[j]);
  return out;
}

Cobracket linearize_P(const BivectorFieldModel& P, const FieldOptions& opt) {
  const Vec3 origin = Vec3::Zero();
  const double p0 = max_abs(P(origin));
  if (p0 > 1e-12) {
    std::ostringstream os;
    os << "linearize_P: P does not vanish at the identity (max component " << p0 << ")";
    throw InvalidInput(os.str());
  }
  Cobracket g(3);
  for (int i = 0; i < 3; ++i) {
    const Mat3 L = lie_derivative_biv(translated_field(unit3(i), opt), P, origin, opt.hv);
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) g.set(i, j, k, L(j, k));
  }
  return g;
}

std::vector<Vec3> sample_grid(int count, double radius) {
  std::vector<Vec3> pts;
  for (int i = 1; static_cast<int>(pts.size()) < count; ++i) {
    const Vec3 u(2.0 * radical_inverse(i, 2) - 1.0, 2.0 * radical_inverse(i, 3) - 1.0,
                 2.0 * radical_inverse(i, 5) - 1.0);
    if (u.norm() <= 1.0) pts.push_back(radius * u);
  }
  return pts;
}

std::vector<Measurement> verify_prop2(const Sh2Options& opt) {
  const double h = opt.field.hv;
  const Sh2Constants k;
  Measurement r1{"fields.translated_mul", "x^lambda(m(a,b)) = (lambda_a)_* x^lambda(b) + (rho_b)_* rho(x^b)(a)", {}, opt.seed};
  Measurement r2{"fields.action_mul", "rho(xi)(m(a,b)) = (lambda_a)_* rho(xi)(b) + (rho_b)_* rho(xi^b)(a)", {}, opt.seed};
  Measurement r3{"fields.translated_bracket", "[x^lambda, y^lambda] = rho(psi(x,y)) + mu(x,y)^lambda", {}, opt.seed};
  Measurement hom{"rho.hom", "[rho(xi), rho(eta)] = rho([xi,eta])", {}, opt.seed};
  for (int s = 0; s < opt.samples; ++s) {
    const HermitianPD a = sample_sh(2, opt.scale, derive_seed(opt.seed, 31, static_cast<std::uint64_t>(s)));
    const HermitianPD b = sample_sh(2, opt.scale, derive_seed(opt.seed, 32, static_cast<std::uint64_t>(s)));
    const HermitianPD mab = loop_mul(a, b);
    for (int i = 0; i < 3; ++i) {
      const CMatrix X = from_sh_coords(Vec(unit3(i)), 2);
      const Vec3 lhs = d_dt([&](double t) { return chart_of(loop_mul(mab, exp_sh(CMatrix(t * X)))); }, h);
      const Vec3 t1 = d_dt([&](double t) { return chart_of(loop_mul(a, loop_mul(b, exp_sh(CMatrix(t * X))))); }, h);
      const CMatrix xb = d_dt_matrix([&](double t) -> CMatrix { return alpha(b, exp_sh(CMatrix(t * X))).matrix(); }, h);
      const Vec3 t2 = d_dt([&](double t) { return chart_of(loop_mul(sigma(a, exp_su(CMatrix(t * xb))), b)); }, h);
      r1.stat.add((lhs - t1 - t2).cwiseAbs().maxCoeff());

      const CMatrix XI = from_su_coords(Vec(unit3(i)), 2);
      const Vec3 lhs2 = d_dt([&](double t) { return chart_of(sigma(mab, exp_su(CMatrix(t * XI)))); }, h);
      const Vec3 u1 = d_dt([&](double t) { return chart_of(loop_mul(a, sigma(b, exp_su(CMatrix(t * XI))))); }, h);
      const CMatrix xib = d_dt_matrix([&](double t) -> CMatrix { return chi(b, exp_su(CMatrix(t * XI))).matrix(); }, h);
      const Vec3 u2 = d_dt([&](double t) { return chart_of(loop_mul(sigma(a, exp_su(CMatrix(t * xib))), b)); }, h);
      r2.stat.add((lhs2 - u1 - u2).cwiseAbs().maxCoeff());
    }
  }
  const auto grid = sample_grid(opt.samples, opt.grid_radius);
  for (const Vec3& c : grid)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const Vec3 br = field_bracket(translated_field(unit3(i), opt.field), translated_field(unit3(j), opt.field), c, h);
        const Vec3 rhs = action_field(k.psi_of(i, j), opt.field)(c) + translated_field(k.mu_of(i, j), opt.field)(c);
        r3.stat.add((br - rhs).cwiseAbs().maxCoeff());
        const Vec3 brr = field_bracket(action_field(unit3(i), opt.field), action_field(unit3(j), opt.field), c, h);
        hom.stat.add((brr - action_field(k.su_bracket(i, j), opt.field)(c)).cwiseAbs().maxCoeff());
      }
  return {r1, r2, r3, hom};
}

std::vector<Measurement> verify_def7_and_cor3(const Sh2Options& opt) {
  const double h = opt.field.hv;
  const Sh2Constants k;
  const BivectorFieldModel P = bivector_P(opt.field);
  const auto grid = sample_grid(opt.grid_points, opt.grid_radius);
  const double s2 = std::sqrt(2.0);

  Measurement d1{"qp.associator", "m(m(a,b),c) = m(sigma(a,alpha(b,c)),m(b,c))", {}, opt.seed};
  Measurement d2{"qp.alpha_cocycle", "alpha(a,b) alpha(m(a,b),c) = chi(a,alpha(b,c)) alpha(sigma(a,alpha(b,c)),m(b,c))", {}, opt.seed};
  for (int s = 0; s < opt.samples; ++s) {
    const auto sd = [&](std::uint64_t w) { return derive_seed(opt.seed, 40 + w, static_cast<std::uint64_t>(s)); };
    const HermitianPD a = sample_sh(2, opt.scale, sd(0)), b = sample_sh(2, opt.scale, sd(1)),
                      c = sample_sh(2, opt.scale, sd(2));
    const SpecialUnitary g = sample_su(2, opt.scale, sd(3)), hh = sample_su(2, opt.scale, sd(4));
    const auto d = identity_defects(g, hh, a, b, c);
    d1.stat.add(d[5]);
    d2.stat.add(d[4]);
  }

  Measurement p0{"P.origin", "P(identity) = 0", {}, opt.seed};
  p0.stat.add(max_abs(P(Vec3::Zero())));
  Measurement pa{"P.antisym", "P^{ij} = -P^{ji}", {}, opt.seed};

  Measurement sch{"qp.schouten", "1/2 [P,P]_S = 0", {}, opt.seed};
  Measurement r3{"qp.rho3_psi", "(Lambda^3 rho)(psi) = 0, psi = -sqrt2 eps1^eps2^eps3", {}, opt.seed};
  Measurement both{"qp.schouten_rho3", "1/2 [P,P]_S = -(Lambda^3 rho)(psi)", {}, opt.seed};

  // (L_{e_a^lambda} P) = s ((e_j ^ e_k)^lambda + (Lambda^2 rho)(eps_j ^ eps_k)).
  const struct { int j, k; double s; } explicit_rel[3] = {{1, 2, s2}, {0, 2, -s2}, {0, 1, s2}};
  Measurement le[3] = {
      {"qp.lie_P.e1", "L_{e1^lambda} P = sqrt2 (e2^e3)^lambda + sqrt2 (Lambda^2 rho)(eps2^eps3)", {}, opt.seed},
      {"qp.lie_P.e2", "L_{e2^lambda} P = -sqrt2 (e1^e3)^lambda - sqrt2 (Lambda^2 rho)(eps1^eps3)", {}, opt.seed},
      {"qp.lie_P.e3", "L_{e3^lambda} P = sqrt2 (e1^e2)^lambda + sqrt2 (Lambda^2 rho)(eps1^eps2)", {}, opt.seed}};
  Measurement lgen{"qp.lie_P", "L_{x^lambda} P = [(L_{x^lambda} P)(e)]^lambda - (Lambda^2 rho)(psi(x))", {}, opt.seed};
  Measurement cor[3] = {{"qp.lie_rho_P.1", "L_{rho(eps1)} P = -(Lambda^2 rho)(mu^t(eps1)) = 0", {}, opt.seed},
                        {"qp.lie_rho_P.2", "L_{rho(eps2)} P = -(Lambda^2 rho)(mu^t(eps2)) = 0", {}, opt.seed},
                        {"qp.lie_rho_P.3", "L_{rho(eps3)} P = -(Lambda^2 rho)(mu^t(eps3)) = 0", {}, opt.seed}};

  const Cobracket gamma_num = linearize_P(P, opt.field);
  for (const Vec3& c : grid) {
    const Mat3 pc = P(c);
    pa.stat.add(max_abs(pc + pc.transpose()));
    const Tensor3 S = schouten_PP(P, c, h);
    const Tensor3 R = wedge3_rho(k.spec.psi, c, opt.field);
    double sv = 0.0, rv = 0.0, bv = 0.0;
    for (std::size_t q = 0; q < S.data().size(); ++q) {
      sv = std::max(sv, std::abs(0.5 * S.data()[q]));
      rv = std::max(rv, std::abs(R.data()[q]));
      bv = std::max(bv, std::abs(0.5 * S.data()[q] + R.data()[q]));
    }
    sch.stat.add(sv);
    r3.stat.add(rv);
    both.stat.add(bv);

    for (int a = 0; a < 3; ++a) {
      const Mat3 L = lie_derivative_biv(translated_field(unit3(a), opt.field), P, c, h);
      Eigen::Matrix3d E = Eigen::Matrix3d::Zero();
      E(explicit_rel[a].j, explicit_rel[a].k) = explicit_rel[a].s;
      E(explicit_rel[a].k, explicit_rel[a].j) = -explicit_rel[a].s;
      const Mat3 rhs = translated_bivector(E, c, opt.field) + wedge2_rho(E, c, opt.field);
      le[a].stat.add(max_abs(L - rhs));

      Eigen::Matrix3d W = gamma_num.apply(Vec(unit3(a)));
      Eigen::Matrix3d Psi_a;
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) Psi_a(j, l) = k.spec.psi(a, j, l);
      const Mat3 gen = translated_bivector(W, c, opt.field) - wedge2_rho(Psi_a, c, opt.field);
      lgen.stat.add(max_abs(L - gen));

      cor[a].stat.add(max_abs(lie_derivative_biv(action_field(unit3(a), opt.field), P, c, h)));
    }
  }

  BialgebraSpec lin = BialgebraSpec::zero(3);
  lin.gamma = gamma_num;
  const AxiomDefects ax = check_axioms(lin);
  Measurement gsq{"tangent.gamma_sq", "gamma^2 = 0 for gamma(x) = (L_{x^lambda} P)(e)", {}, opt.seed};
  gsq.stat.add(ax.co_jacobi);
  Measurement gder{"tangent.derivation", "gamma(mu(x,y)) = mu(gamma x, y) + mu(x, gamma y), both sides 0 since mu = 0", {}, opt.seed};
  gder.stat.add(ax.derivation);
  Measurement gmatch{"tangent.gamma_su2", "(L_{e_i^lambda} P)(e) = su(2) cobracket", {}, opt.seed};
  double gm = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gm = std::max(gm, std::abs(gamma_num(a, i, j) - k.spec.gamma(a, i, j)));
  gmatch.stat.add(gm);

  return {d1, d2, p0, pa, sch, r3, both, le[0], le[1], le[2], lgen, cor[0], cor[1], cor[2], gsq, gder, gmatch};
}

TangentExtraction extract_tangent_bialgebra(const Sh2Options& opt, double commutator_h) {
  const BialgebraSpec ref = sh2_bialgebra();
  TangentExtraction out;
  out.spec = BialgebraSpec::zero(3);
  const auto sh = sh_basis(2);
  Eigen::Matrix3d psi_ij[3];  // psi_ij[k](i, j) = psi(e_i, e_j)_k
  for (auto& m : psi_ij) m.setZero();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Vec mu = sh_coords(akivis_commutator_numeric(sh[i], sh[j], commutator_h));
      for (int c = 0; c < 3; ++c) out.spec.mu.set(i, j, c, mu[c]);
      const auto coeff = fd::taylor_coefficients(
          [&](double t) -> Vec {
            return su_coords(matrix_log_unitary(alpha(exp_sh(CMatrix(t * sh[i])), exp_sh(CMatrix(t * sh[j]))).matrix()));
          },
          2, commutator_h);
      for (int c = 0; c < 3; ++c) {
        psi_ij[c](i, j) = 2.0 * coeff[2][c];
        psi_ij[c](j, i) = -2.0 * coeff[2][c];
      }
    }
  // Total antisymmetrization: psi(0,1,2) from the three independent readings.
  out.spec.psi.set(0, 1, 2, (psi_ij[2](0, 1) + psi_ij[0](1, 2) + psi_ij[1](2, 0)) / 3.0);
  out.spec.gamma = linearize_P(bivector_P(opt.field), opt.field);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        out.mu_error = std::max(out.mu_error, std::abs(out.spec.mu(a, b, c) - ref.mu(a, b, c)));
        out.gamma_error = std::max(out.gamma_error, std::abs(out.spec.gamma(a, b, c) - ref.gamma(a, b, c)));
        out.psi_error = std::max(out.psi_error, std::abs(out.spec.psi(a, b, c) - ref.psi(a, b, c)));
      }
  out.axioms = check_axioms(out.spec);
  return out;
}

}  // namespace lieloop
