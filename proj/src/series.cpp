#include "lieloop/series.hpp"

#include <random>
#include <sstream>
#include <string>

#include "lieloop/finite_difference.hpp"
#include "lieloop/quasi_double_group.hpp"

namespace lieloop {

namespace {

TruncatedSeriesValue make(Codomain c, int dim, const Vec& o0, const Vec& o1, const Vec& o2, const Vec& o3) {
  TruncatedSeriesValue v;
  v.codomain = c;
  v.order = {o0, o1, o2, o3};
  for (auto& o : v.order)
    if (o.size() == 0) o = Vec::Zero(dim);
  return v;
}

Vec g1_part(const QuasiDoubleAlgebra& qd, const Vec& u) { return u.head(qd.dim1()); }
Vec g2_part(const QuasiDoubleAlgebra& qd, const Vec& u) { return u.tail(qd.dim2()); }

Vec full_from(const QuasiDoubleAlgebra& qd, const Vec& g1, const Vec& g2) {
  Vec u(qd.dim());
  u << g1, g2;
  return u;
}

const Tolerances kProductTol{1e-8, 1e-8, 1e-8};

HermitianPD exp_sh(const CMatrix& x, double t) { return HermitianPD(matrix_exp(CMatrix(t * x)), kProductTol); }
SpecialUnitary exp_su(const CMatrix& xi, double t) { return SpecialUnitary(matrix_exp(CMatrix(t * xi)), kProductTol); }

std::array<Vec, 4> coeffs(const std::vector<Vec>& c) { return {c[0], c[1], c[2], c[3]}; }

}  // namespace

TruncatedSeriesValue expand_m(const Vec& x, const Vec& y, const QuasiDoubleParts& p) {
  const Vec mxy = p.mu_of(x, y), myx = p.mu_of(y, x);
  const Vec o3 = (p.mu_of(x, mxy) + p.mu_of(y, myx) + p.act_of(x, p.psi_of(x, y)) + p.act_of(y, p.psi_of(y, x))) / 12.0;
  return make(Codomain::G2, p.dim2, Vec::Zero(p.dim2), x + y, 0.5 * mxy, o3);
}

TruncatedSeriesValue expand_alpha(const Vec& x, const Vec& y, const QuasiDoubleParts& p) {
  const Vec pxy = p.psi_of(x, y), pyx = p.psi_of(y, x);
  const Vec o3 = (p.psi_of(x, p.mu_of(x, y)) + p.psi_of(y, p.mu_of(y, x)) + p.coact_of(x, pxy) + p.coact_of(y, pyx)) / 12.0;
  return make(Codomain::G1, p.dim1, Vec::Zero(p.dim1), Vec::Zero(p.dim1), 0.5 * pxy, o3);
}

TruncatedSeriesValue expand_sigma(const Vec& x, const Vec& xi, const QuasiDoubleParts& p) {
  const Vec xxi = p.act_of(x, xi);
  const Vec o3 = (p.mu_of(x, xxi) + p.act_of(x, p.coact_of(x, xi)) + p.act_of(xxi, xi)) / 12.0;
  return make(Codomain::G2, p.dim2, Vec::Zero(p.dim2), x, 0.5 * xxi, o3);
}

TruncatedSeriesValue expand_chi(const Vec& x, const Vec& xi, const QuasiDoubleParts& p) {
  const Vec xix = p.coact_of(x, xi), xxi = p.act_of(x, xi);
  const Vec o3 = (p.psi_of(x, xxi) + p.br1(xix, xi) + p.coact_of(x, xix) + p.coact_of(xxi, xi)) / 12.0;
  return make(Codomain::G1, p.dim1, Vec::Zero(p.dim1), xi, 0.5 * xix, o3);
}

std::array<Vec, 4> bch3(const Vec& u, const Vec& v, const QuasiDoubleAlgebra& qd) {
  const Vec uv = qd.br(u, v);
  return {Vec::Zero(qd.dim()), u + v, 0.5 * uv, (qd.br(u, uv) + qd.br(v, qd.br(v, u))) / 12.0};
}

ModelCoefficients model_coefficients(int n, const Vec& x, const Vec& y, const Vec& xi, double h) {
  const CMatrix X = from_sh_coords(x, n), Y = from_sh_coords(y, n), XI = from_su_coords(xi, n);
  ModelCoefficients out;
  out.m = coeffs(fd::taylor_coefficients(
      [&](double t) -> Vec { return sh_coords(matrix_log_hpd(loop_mul(exp_sh(X, t), exp_sh(Y, t)))); }, 3, h));
  out.alpha = coeffs(fd::taylor_coefficients(
      [&](double t) -> Vec { return su_coords(matrix_log_unitary(alpha(exp_sh(X, t), exp_sh(Y, t)).matrix())); }, 3, h));
  out.sigma = coeffs(fd::taylor_coefficients(
      [&](double t) -> Vec { return sh_coords(matrix_log_hpd(sigma(exp_sh(X, t), exp_su(XI, t)))); }, 3, h));
  out.chi = coeffs(fd::taylor_coefficients(
      [&](double t) -> Vec { return su_coords(matrix_log_unitary(chi(exp_sh(X, t), exp_su(XI, t)).matrix())); }, 3, h));
  return out;
}

ModelCoefficients product_log_coefficients(int n, const Vec& x, const Vec& y, const Vec& xi, double h) {
  const CMatrix X = from_sh_coords(x, n), Y = from_sh_coords(y, n), XI = from_su_coords(xi, n);
  const auto log_xy = [&](double t) -> CMatrix {
    return matrix_log_near_identity(CMatrix(matrix_exp(CMatrix(t * X)) * matrix_exp(CMatrix(t * Y))));
  };
  const auto log_xxi = [&](double t) -> CMatrix {
    return matrix_log_near_identity(CMatrix(matrix_exp(CMatrix(t * X)) * matrix_exp(CMatrix(t * XI))));
  };
  ModelCoefficients out;
  out.m = coeffs(fd::taylor_coefficients([&](double t) -> Vec { return sh_coords(log_xy(t)); }, 3, h));
  out.alpha = coeffs(fd::taylor_coefficients([&](double t) -> Vec { return su_coords(log_xy(t)); }, 3, h));
  out.sigma = coeffs(fd::taylor_coefficients([&](double t) -> Vec { return sh_coords(log_xxi(t)); }, 3, h));
  out.chi = coeffs(fd::taylor_coefficients([&](double t) -> Vec { return su_coords(log_xxi(t)); }, 3, h));
  return out;
}

std::vector<Measurement> taylor_match_report(const TaylorMatchOptions& opt) {
  if (opt.n < 2 || opt.n > 3) throw InvalidInput("taylor_match_report: n must be 2 or 3");
  if (!(opt.h >= 1e-3 && opt.h <= 1e-1)) throw InvalidInput("taylor_match_report: h outside [1e-3, 1e-1]");
  if (opt.samples < 1) throw InvalidInput("taylor_match_report: samples must be >= 1");
  const QuasiDoubleAlgebra qd = sl_n_model(opt.n);
  const QuasiDoubleParts p = project_components(qd);
  const char* names[4] = {"m", "alpha", "sigma", "chi"};
  const char* formulas[4] = {
      "m(x,y) = x + y + 1/2 mu(x,y) + 1/12 (mu(x,mu(x,y)) + mu(y,mu(y,x)) + x^psi(x,y) + y^psi(y,x))",
      "alpha(x,y) = 1/2 psi(x,y) + 1/12 (psi(x,mu(x,y)) + psi(y,mu(y,x)) + psi(x,y)^x + psi(y,x)^y)",
      "sigma(x,xi) = x + 1/2 x^xi + 1/12 (mu(x,x^xi) + x^(xi^x) + (x^xi)^xi)",
      "chi(x,xi) = xi + 1/2 xi^x + 1/12 (psi(x,x^xi) + [xi^x,xi] + (xi^x)^x + xi^(x^xi))",
  };
  std::vector<Measurement> model(16), bch(16);
  for (int f = 0; f < 4; ++f)
    for (int k = 0; k < 4; ++k) {
      const std::string suffix = std::string(names[f]) + ".o" + std::to_string(k);
      model[4 * f + k] = {"series." + suffix, std::string(formulas[f]) + "  [order " + std::to_string(k) + " vs matrix model]", {}, opt.seed};
      bch[4 * f + k] = {"series.bch." + suffix, std::string(names[f]) + " order " + std::to_string(k) +
                            " vs projection of log(exp tx exp ty) (resp. exp tx exp t xi)", {}, opt.seed};
    }
  Measurement tensor_xy{"series.tensor.alpha+m", "alpha(x,y) + m(x,y) = BCH(x,y) through order 3", {}, opt.seed};
  Measurement tensor_xxi{"series.tensor.chi+sigma", "chi(x,xi) + sigma(x,xi) = BCH(x,xi) through order 3", {}, opt.seed};

  const auto scaled = [&](std::mt19937_64& rng) {
    return CMatrix(opt.scale * random_traceless_hermitian(opt.n, rng));
  };
  const auto diff = [](const Vec& a, const Vec& b) { return (a - b).cwiseAbs().maxCoeff(); };
  for (int s = 0; s < opt.samples; ++s) {
    std::mt19937_64 rng(derive_seed(opt.seed, 7, static_cast<std::uint64_t>(s)));
    const Vec x = sh_coords(scaled(rng)), y = sh_coords(scaled(rng));
    const Vec xi = su_coords(CMatrix(Complex(0.0, 1.0) * scaled(rng)));
    const TruncatedSeriesValue ex[4] = {expand_m(x, y, p), expand_alpha(x, y, p), expand_sigma(x, xi, p),
                                        expand_chi(x, xi, p)};
    const ModelCoefficients mc = model_coefficients(opt.n, x, y, xi, opt.h);
    const ModelCoefficients pc = product_log_coefficients(opt.n, x, y, xi, opt.h);
    const std::array<Vec, 4>* mm[4] = {&mc.m, &mc.alpha, &mc.sigma, &mc.chi};
    const std::array<Vec, 4>* pp[4] = {&pc.m, &pc.alpha, &pc.sigma, &pc.chi};
    for (int f = 0; f < 4; ++f)
      for (int k = 0; k < 4; ++k) {
        model[4 * f + k].stat.add(diff(ex[f].order[k], (*mm[f])[k]));
        bch[4 * f + k].stat.add(diff(ex[f].order[k], (*pp[f])[k]));
      }
    const auto b_xy = bch3(full_from(qd, Vec::Zero(qd.dim1()), x), full_from(qd, Vec::Zero(qd.dim1()), y), qd);
    const auto b_xxi = bch3(full_from(qd, Vec::Zero(qd.dim1()), x), full_from(qd, xi, Vec::Zero(qd.dim2())), qd);
    double dxy = 0.0, dxxi = 0.0;
    for (int k = 0; k < 4; ++k) {
      dxy = std::max({dxy, diff(g1_part(qd, b_xy[k]), ex[1].order[k]), diff(g2_part(qd, b_xy[k]), ex[0].order[k])});
      dxxi = std::max({dxxi, diff(g1_part(qd, b_xxi[k]), ex[3].order[k]), diff(g2_part(qd, b_xxi[k]), ex[2].order[k])});
    }
    tensor_xy.stat.add(dxy);
    tensor_xxi.stat.add(dxxi);
  }
  std::vector<Measurement> out = model;
  out.insert(out.end(), bch.begin(), bch.end());
  out.push_back(tensor_xy);
  out.push_back(tensor_xxi);
  return out;
}

}  // namespace lieloop
