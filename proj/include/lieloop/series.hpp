#pragma once

// Third-order expansions of m, alpha, sigma, chi over a quasi-double algebra,
// and their comparison with the SL(n,C) matrix model under one-parameter
// scaling (t x, t y) or (t x, t xi): order k is the coefficient of t^k.

#include <array>
#include <cstdint>
#include <vector>

#include "lieloop/quasi_double_algebra.hpp"
#include "lieloop/report.hpp"

namespace lieloop {

enum class Codomain { G1, G2 };

struct TruncatedSeriesValue {
  Codomain codomain = Codomain::G2;
  std::array<Vec, 4> order;  // coefficients of t^0 .. t^3, in g1 or g2 coordinates

  Vec sum() const { return order[0] + order[1] + order[2] + order[3]; }
};

/// x + y + 1/2 mu(x,y) + 1/12 (mu(x,mu(x,y)) + mu(y,mu(y,x)) + x^psi(x,y) + y^psi(y,x))
TruncatedSeriesValue expand_m(const Vec& x, const Vec& y, const QuasiDoubleParts& p);
/// 1/2 psi(x,y) + 1/12 (psi(x,mu(x,y)) + psi(y,mu(y,x)) + psi(x,y)^x + psi(y,x)^y)
TruncatedSeriesValue expand_alpha(const Vec& x, const Vec& y, const QuasiDoubleParts& p);
/// x + 1/2 x^xi + 1/12 (mu(x,x^xi) + x^(xi^x) + (x^xi)^xi)
TruncatedSeriesValue expand_sigma(const Vec& x, const Vec& xi, const QuasiDoubleParts& p);
/// xi + 1/2 xi^x + 1/12 (psi(x,x^xi) + [xi^x,xi] + (xi^x)^x + xi^(x^xi))
TruncatedSeriesValue expand_chi(const Vec& x, const Vec& xi, const QuasiDoubleParts& p);

/// Order-3 Campbell-Hausdorff series log(exp u exp v) in the full algebra, by order.
std::array<Vec, 4> bch3(const Vec& u, const Vec& v, const QuasiDoubleAlgebra& qd);

/// Taylor coefficients t^0..t^3 of the matrix-model maps, pulled back through the
/// Hermitian or unitary logarithm. x, y are sh(n) coordinates, xi su(n) coordinates.
struct ModelCoefficients {
  std::array<Vec, 4> m, alpha, sigma, chi;
};
ModelCoefficients model_coefficients(int n, const Vec& x, const Vec& y, const Vec& xi, double h);

/// Taylor coefficients of the projections of log(exp(t x) exp(t y)) (g2 part, g1 part) and
/// log(exp(t x) exp(t xi)) (g2 part, g1 part), same layout as ModelCoefficients.
ModelCoefficients product_log_coefficients(int n, const Vec& x, const Vec& y, const Vec& xi, double h);

struct TaylorMatchOptions {
  int n = 2;
  double h = 1e-2;
  int samples = 32;
  double scale = 1.0;
  std::uint64_t seed = 1;
};

/// Per map and order, max discrepancy between the expansion formulas and the matrix model.
/// Ids "series.<map>.o<k>". Also returns diagnostics:
///   "series.bch.<map>.o<k>"   formulas vs projections of log(exp tx exp ty) on the model
///   "series.tensor.*"         alpha + m vs BCH(x,y), sigma + chi vs BCH(x,xi), at tensor level
std::vector<Measurement> taylor_match_report(const TaylorMatchOptions& opt);

}  // namespace lieloop
