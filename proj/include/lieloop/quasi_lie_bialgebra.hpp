#pragma once

// Quasi-Lie bialgebras (F, mu, gamma, psi) in a basis x_0..x_{n-1} of F with
// dual basis xi^0..xi^{n-1} of F*.
//
//   mu(x_i, x_j)      = sum_k mu(i,j,k) x_k
//   gamma(x_k)        = 1/2 sum_{ij} g(k,i,j) x_i ^ x_j,  so [xi^i, xi^j]_* = sum_k g(k,i,j) xi^k
//   psi               = 1/6 sum psi(i,j,k) xi^i ^ xi^j ^ xi^k

#include <cstdint>
#include <string>
#include <vector>

#include "lieloop/multivector.hpp"
#include "lieloop/quasi_double_algebra.hpp"
#include "lieloop/report.hpp"
#include "lieloop/structure_tensor.hpp"

namespace lieloop {

/// g(k, i, j) = -g(k, j, i).
class Cobracket {
 public:
  Cobracket() = default;
  explicit Cobracket(int dim) : t_(dim, dim, dim) {}
  static Cobracket from_tensor(const Tensor3& t, const std::string& name = "gamma");

  int dim() const { return t_.dim(0); }
  double operator()(int k, int i, int j) const { return t_(k, i, j); }
  void set(int k, int i, int j, double v);
  const Tensor3& tensor() const { return t_; }

  /// Bracket on F*: [xi, eta]_k = sum_ij g(k,i,j) xi_i eta_j.
  Vec dual_bracket(const Vec& xi, const Vec& eta) const;
  /// gamma(x) as the antisymmetric matrix W(i,j) = sum_k x_k g(k,i,j).
  Eigen::MatrixXd apply(const Vec& x) const;
  double max_abs() const { return t_.max_abs(); }

 private:
  Tensor3 t_;
};

struct BialgebraSpec {
  int dim = 0;
  AntisymBilinearTensor mu;
  Cobracket gamma;
  Trivector psi;

  static BialgebraSpec zero(int dim);
  /// InvalidInput if tensor shapes disagree with dim.
  void validate_shape() const;
};

struct DoubleLieAlgebra {
  int dim = 0;  // 2 dim F; x_i first, then xi^i
  AntisymBilinearTensor bracket;
};

struct AxiomDefects {
  double co_jacobi = 0.0;        // (1) co-Jacobi identity of gamma
  double derivation = 0.0;       // (2) gamma is a derivation of mu
  double mu_jacobiator = 0.0;    // (3) co-Jacobiator of mu^t = delta_gamma psi
  double psi_closed = 0.0;       // (4) Alt((mu^t x Id x Id) psi) = 0
  double max() const;
};

struct Prop1Defects {
  double gg = 0.0;        // [gamma, gamma]
  double gm = 0.0;        // [gamma, mu]
  double mm_gp = 0.0;     // 1/2 [mu, mu] + [gamma, psi]
  double mp = 0.0;        // [mu, psi]
  double max() const;
};

AxiomDefects check_axioms(const BialgebraSpec& spec);
Prop1Defects check_prop1(const BialgebraSpec& spec);

/// Bracket of the double on F + F*:
///   M(x_a, x_b)   = mu(x_a, x_b) + psi(x_a, x_b, .)
///   M(x_a, xi^i)  = sum_j g(a,i,j) x_j - sum_j mu(a,j,i) xi^j
///   M(xi^i, xi^j) = [xi^i, xi^j]_*
/// No validity check; see build_double.
DoubleLieAlgebra assemble_double_bracket(const BialgebraSpec& spec);

/// As assemble_double_bracket, but InvalidInput unless check_axioms passes within tol.
DoubleLieAlgebra build_double(const BialgebraSpec& spec, double tol = 1e-10);

/// max over basis triples of |<M(u,v),w> + <v,M(u,w)>| for <x_i, xi^j> = delta_ij.
double check_invariant_pairing(const DoubleLieAlgebra& d);

/// Embeddings into the exterior algebra of F + F*.
GradedMultiVector embed_mu(const AntisymBilinearTensor& mu);
GradedMultiVector embed_gamma(const Cobracket& gamma);
GradedMultiVector embed_psi(const Trivector& psi);
/// 1/2 sum omega(i,j) xi^i xi^j for an antisymmetric matrix omega.
GradedMultiVector embed_omega(const Eigen::MatrixXd& omega);

/// Inverses of the embeddings; InvalidInput if v has terms of another type.
AntisymBilinearTensor extract_mu(const GradedMultiVector& v);
Cobracket extract_gamma(const GradedMultiVector& v);
Trivector extract_psi(const GradedMultiVector& v);

/// Twist of the Lie bialgebra (F, 0, gamma, 0) by omega in Lambda^2 F*:
///   mu = {omega, gamma},  psi = 1/2 {omega, {omega, gamma}}
/// in the big bracket. InvalidInput if gamma fails co-Jacobi or omega is not antisymmetric.
BialgebraSpec twist_construct(const Cobracket& gamma, const Eigen::MatrixXd& omega, double tol = 1e-10);

/// (sh(2), 0, gamma, psi): gamma = su(2) constants, psi(0,1,2) = -sqrt2.
BialgebraSpec sh2_bialgebra();

/// Lie cobracket: structure constants of a random solvable or su(2)-type Lie algebra
/// in a random basis.
Cobracket random_lie_cobracket(int dim, std::uint64_t seed);

/// Random antisymmetric matrix with standard normal entries.
Eigen::MatrixXd random_antisymmetric(int dim, std::uint64_t seed);

}  // namespace lieloop
