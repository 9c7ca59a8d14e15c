#pragma once

// Fields on SH(2) in the global chart c -> exp(sum c_i e_i).
//
// Vector fields are chart components; bivector and trivector fields are
// antisymmetric component arrays, with (u ^ v)^{ij} = u^i v^j - u^j v^i.

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "lieloop/quasi_lie_bialgebra.hpp"
#include "lieloop/report.hpp"

namespace lieloop {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VectorFieldModel = std::function<Vec3(const Vec3&)>;
using BivectorFieldModel = std::function<Mat3(const Vec3&)>;

struct FieldOptions {
  double hv = 1e-3;      // step for first derivatives
  double radius = 1.0;   // chart working radius
};

/// exp(sum c_i e_i); InvalidInput if |c| > radius.
HermitianPD chart_to_point(const Vec3& c, double radius = 1.0);
/// Re tr(log(a) e_i); InvalidInput if the result lies outside radius.
Vec3 point_to_chart(const HermitianPD& a, double radius = 1.0);

/// x^lambda: a -> d/dt chart(m(a, exp(t x))) at 0. x in sh(2) coordinates.
VectorFieldModel translated_field(const Vec3& x, const FieldOptions& opt = {});
/// rho(xi): a -> d/dt chart(sigma(a, exp(t xi))) at 0. xi in su(2) coordinates.
VectorFieldModel action_field(const Vec3& xi, const FieldOptions& opt = {});
/// P = 1/2 sum_i e_i^lambda ^ rho(eps_i).
BivectorFieldModel bivector_P(const FieldOptions& opt = {});

Mat3 wedge(const Vec3& u, const Vec3& v);
/// (u ^ v ^ w)^{ijk}.
Tensor3 wedge3(const Vec3& u, const Vec3& v, const Vec3& w);

/// Partial derivatives d_l F at c, l = 0..2, 5-point central stencil.
std::array<Vec3, 3> gradient(const VectorFieldModel& f, const Vec3& c, double h);
std::array<Mat3, 3> gradient(const BivectorFieldModel& f, const Vec3& c, double h);

/// [X, Y]^i = X^l d_l Y^i - Y^l d_l X^i.
Vec3 field_bracket(const VectorFieldModel& X, const VectorFieldModel& Y, const Vec3& c, double h);
/// (L_X P)^{ij} = X^l d_l P^{ij} - P^{lj} d_l X^i - P^{il} d_l X^j, antisymmetrized.
Mat3 lie_derivative_biv(const VectorFieldModel& X, const BivectorFieldModel& P, const Vec3& c, double h);
/// [P, P]^{ijk} = 2 sum_l (P^{li} d_l P^{jk} + P^{lj} d_l P^{ki} + P^{lk} d_l P^{ij}).
Tensor3 schouten_PP(const BivectorFieldModel& P, const Vec3& c, double h);

/// (Lambda^2 rho)(B) for B = 1/2 sum B(i,j) eps_i ^ eps_j, at c.
Mat3 wedge2_rho(const Eigen::Matrix3d& B, const Vec3& c, const FieldOptions& opt = {});
/// (Lambda^3 rho)(psi) for psi = 1/6 sum psi(i,j,k) eps_i ^ eps_j ^ eps_k, at c.
Tensor3 wedge3_rho(const Trivector& psi, const Vec3& c, const FieldOptions& opt = {});
/// (gamma(x))^lambda at c for a bivector gamma(x) = 1/2 sum W(i,j) e_i ^ e_j.
Mat3 translated_bivector(const Eigen::Matrix3d& W, const Vec3& c, const FieldOptions& opt = {});

/// gamma(e_i) = (L_{e_i^lambda} P)(0). InvalidInput if P(0) != 0.
Cobracket linearize_P(const BivectorFieldModel& P, const FieldOptions& opt = {});

/// Deterministic Halton points inside the ball of the given radius.
std::vector<Vec3> sample_grid(int count, double radius);

struct Sh2Options {
  FieldOptions field;
  int grid_points = 16;
  double grid_radius = 0.5;
  int samples = 8;      // matrix-level samples for the loop relations
  double scale = 0.3;
  std::uint64_t seed = 1;
};

/// The three relations for translated fields, action fields and their brackets.
/// Ids "fields.translated_mul" .. "fields.translated_bracket" plus "rho.hom".
std::vector<Measurement> verify_prop2(const Sh2Options& opt);

/// The quasi-Poisson quasigroup conditions ("qp.*"): the two group identities,
/// 1/2 [P,P] = -(Lambda^3 rho)(psi), the Lie derivative of P along translated and
/// action fields; P(0) = 0 ("P.*"); the linearized cobracket ("tangent.*").
std::vector<Measurement> verify_def7_and_cor3(const Sh2Options& opt);

struct TangentExtraction {
  BialgebraSpec spec;            // (mu_num, gamma_num, psi_num)
  double mu_error = 0.0;         // vs sh2_bialgebra(), max abs
  double gamma_error = 0.0;
  double psi_error = 0.0;
  AxiomDefects axioms;
};

/// mu from the numeric loop commutator, gamma from linearize_P, psi from the
/// order-2 coefficient of alpha(exp t e_i, exp t e_j).
TangentExtraction extract_tangent_bialgebra(const Sh2Options& opt, double commutator_h = 1e-2);

}  // namespace lieloop
