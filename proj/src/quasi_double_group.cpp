#include "lieloop/quasi_double_group.hpp"

#include <algorithm>
#include <sstream>

namespace lieloop {

namespace {

const Tolerances kProductTol{1e-8, 1e-8, 1e-8};

SpecialUnitary to_su(const CMatrix& m, const char* what) {
  try {
    return SpecialUnitary(m, kProductTol);
  } catch (const Error& e) {
    std::ostringstream os;
    os << what << ": result left SU(n): " << e.what();
    throw NumericalFailure(os.str());
  }
}

CMatrix mm(const SpecialUnitary& g, const HermitianPD& a) { return g.matrix() * a.matrix(); }

SpecialUnitary su_mul(const SpecialUnitary& g, const SpecialUnitary& h) {
  return to_su(g.matrix() * h.matrix(), "su_mul");
}

double dist(const CMatrix& a, const CMatrix& b) { return frobenius_distance(a, b); }

enum Stream : std::uint64_t { kG = 1, kH, kA, kB, kC };

struct Tuple {
  SpecialUnitary g, h;
  HermitianPD a, b, c;
};

Tuple draw(const SweepOptions& opt, std::uint64_t stream, int i) {
  const auto s = [&](std::uint64_t which) {
    return derive_seed(derive_seed(opt.seed, stream, static_cast<std::uint64_t>(i)), which, 0);
  };
  return Tuple{sample_su(opt.n, opt.scale, s(kG)), sample_su(opt.n, opt.scale, s(kH)),
               sample_sh(opt.n, opt.scale, s(kA)), sample_sh(opt.n, opt.scale, s(kB)),
               sample_sh(opt.n, opt.scale, s(kC))};
}

const char* const kAnchors[9] = {
    "chi(a,gh) = chi(a,g) chi(sigma(a,g),h)   [(gh)^a = g^a h^(a^g)]",
    "sigma(sigma(a,g),h) = sigma(a,gh)   [(a^g)^h = a^(gh)]",
    "chi(a,chi(b,g)) alpha(sigma(a,chi(b,g)),sigma(b,g)) = alpha(a,b) chi(m(a,b),g)",
    "sigma(m(a,b),g) = m(sigma(a,chi(b,g)),sigma(b,g))",
    "alpha(a,b) alpha(m(a,b),c) = chi(a,alpha(b,c)) alpha(sigma(a,alpha(b,c)),m(b,c))",
    "m(m(a,b),c) = m(sigma(a,alpha(b,c)),m(b,c))",
    "rho_c o rho_b (a) = lambda_{sigma(a,alpha(b,c))} o rho_c (b)",
    "lambda_c o lambda_a (b) = rho_b o lambda_{sigma(c,alpha(a,b)^-1)} (a)",
    "rho_b o lambda_a (c) = lambda_{sigma(a,alpha(c,b))} o rho_b (c)",
};

const char* const kIds[9] = {
    "group.chi_cocycle",   "group.sigma_action",  "group.chi_alpha",
    "group.sigma_m",       "group.alpha_cocycle", "group.associator",
    "translate.right",     "translate.left",      "translate.swapped",
};

std::vector<Measurement> sweep(const SweepOptions& opt, std::uint64_t stream, int first, int count) {
  if (opt.samples < 1) throw InvalidInput("verification sweep: samples must be >= 1");
  std::vector<Measurement> out(count);
  for (int k = 0; k < count; ++k) {
    out[k].id = kIds[first + k];
    out[k].anchor = kAnchors[first + k];
    out[k].seed = opt.seed;
  }
  for (int i = 0; i < opt.samples; ++i) {
    const Tuple t = draw(opt, stream, i);
    const std::vector<double> d = identity_defects(t.g, t.h, t.a, t.b, t.c);
    for (int k = 0; k < count; ++k) out[k].stat.add(d[first + k]);
  }
  return out;
}

}  // namespace

SpecialUnitary alpha(const HermitianPD& a, const HermitianPD& b) {
  const HermitianPD m = loop_mul(a, b);
  const CMatrix ab = a.matrix() * b.matrix();
  return to_su(ab * hermitian_power(m, -1.0).matrix(), "alpha");
}

HermitianPD sigma(const HermitianPD& a, const SpecialUnitary& g) {
  if (a.dim() != g.dim()) throw InvalidInput("sigma: dimension mismatch");
  const CMatrix& am = a.matrix();
  const CMatrix& gm = g.matrix();
  return hermitian_sqrt(CMatrix(gm.adjoint() * am * am * gm), kProductTol);
}

SpecialUnitary chi(const HermitianPD& a, const SpecialUnitary& g) {
  const HermitianPD s = sigma(a, g);
  return to_su(a.matrix() * g.matrix() * hermitian_power(s, -1.0).matrix(), "chi");
}

std::vector<double> identity_defects(const SpecialUnitary& g, const SpecialUnitary& h,
                                     const HermitianPD& a, const HermitianPD& b,
                                     const HermitianPD& c) {
  std::vector<double> d(9);
  const SpecialUnitary gh = su_mul(g, h);
  const HermitianPD ag = sigma(a, g);
  const HermitianPD mab = loop_mul(a, b);
  const HermitianPD mbc = loop_mul(b, c);
  const SpecialUnitary abc = alpha(b, c);
  const SpecialUnitary chi_bg = chi(b, g);
  const HermitianPD bg = sigma(b, g);

  d[0] = dist(chi(a, gh).matrix(), chi(a, g).matrix() * chi(ag, h).matrix());
  d[1] = dist(sigma(ag, h).matrix(), sigma(a, gh).matrix());
  {
    const HermitianPD a_chibg = sigma(a, chi_bg);
    const CMatrix lhs = chi(a, chi_bg).matrix() * alpha(a_chibg, bg).matrix();
    const CMatrix rhs = alpha(a, b).matrix() * chi(mab, g).matrix();
    d[2] = dist(lhs, rhs);
    d[3] = dist(sigma(mab, g).matrix(), loop_mul(a_chibg, bg).matrix());
  }
  const HermitianPD a_abc = sigma(a, abc);
  d[4] = dist(alpha(a, b).matrix() * alpha(mab, c).matrix(),
              chi(a, abc).matrix() * alpha(a_abc, mbc).matrix());
  const HermitianPD assoc_lhs = loop_mul(mab, c);
  d[5] = dist(assoc_lhs.matrix(), loop_mul(a_abc, mbc).matrix());
  d[6] = d[5];
  // m(c, m(a,b)) = m(m(sigma(c, alpha(a,b)^{-1}), a), b)
  {
    const HermitianPD c_twist = sigma(c, alpha(a, b).inverse());
    d[7] = dist(loop_mul(c, mab).matrix(), loop_mul(loop_mul(c_twist, a), b).matrix());
  }
  // m(m(a,c),b) = m(sigma(a, alpha(c,b)), m(c,b))
  d[8] = dist(loop_mul(loop_mul(a, c), b).matrix(),
              loop_mul(sigma(a, alpha(c, b)), loop_mul(c, b)).matrix());
  return d;
}

std::vector<Measurement> verify_decomposition(const SweepOptions& opt) {
  if (opt.samples < 1) throw InvalidInput("verify_decomposition: samples must be >= 1");
  Measurement recompose{"decomp.recompose", "alpha(a,b) m(a,b) = ab", {}, opt.seed};
  Measurement reproject{"decomp.reproject", "polar_project(g a) = (g, a), polar_project(g a) recomposes",
                        {}, opt.seed};
  Measurement sig{"decomp.sigma_chi", "sigma(a,g) = SH factor of ag, chi(a,g) sigma(a,g) = ag", {},
                  opt.seed};
  for (int i = 0; i < opt.samples; ++i) {
    const Tuple t = draw(opt, 100, i);
    recompose.stat.add(dist(mm(alpha(t.a, t.b), loop_mul(t.a, t.b)), t.a.matrix() * t.b.matrix()));
    const CMatrix d = mm(t.g, t.a);
    const PolarFactors p = polar_project(d);
    const PolarFactors q = polar_project(mm(p.g, p.a));
    reproject.stat.add(std::max({dist(mm(p.g, p.a), d), dist(p.g.matrix(), t.g.matrix()),
                                 dist(p.a.matrix(), t.a.matrix()),
                                 dist(q.g.matrix(), p.g.matrix()),
                                 dist(q.a.matrix(), p.a.matrix())}));
    const CMatrix ag = t.a.matrix() * t.g.matrix();
    const PolarFactors r = polar_project(ag);
    sig.stat.add(std::max(dist(sigma(t.a, t.g).matrix(), r.a.matrix()),
                          dist(mm(chi(t.a, t.g), sigma(t.a, t.g)), ag)));
  }
  return {recompose, reproject, sig};
}

std::vector<Measurement> verify_theorem1(const SweepOptions& opt) {
  return sweep(opt, 1, 0, 6);
}

std::vector<Measurement> verify_corollary1(const SweepOptions& opt) {
  return sweep(opt, 2, 6, 3);
}

}  // namespace lieloop
