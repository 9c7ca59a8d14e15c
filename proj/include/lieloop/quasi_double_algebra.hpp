#pragma once

// Quasi-double Lie algebras g = g1 + g2 as real structure constants in an
// adapted basis: g1 indices first, then g2.
//
// For x, y in g2 and xi, eta in g1:
//   [x, y]  = psi(x, y) + mu(x, y)         (g1 part + g2 part)
//   [x, xi] = coact(x, xi) + act(x, xi)    (xi^x in g1, x^xi in g2)

#include <cstdint>
#include <vector>

#include "lieloop/matrix_core.hpp"
#include "lieloop/report.hpp"
#include "lieloop/structure_tensor.hpp"

namespace lieloop {

class QuasiDoubleAlgebra {
 public:
  /// Validates shape and that g1 closes under the bracket (within closure_tol).
  /// The Jacobi identity is not enforced here; see jacobi_check.
  QuasiDoubleAlgebra(int dim1, int dim2, AntisymBilinearTensor bracket, double closure_tol = 1e-12);

  int dim1() const { return dim1_; }
  int dim2() const { return dim2_; }
  int dim() const { return dim1_ + dim2_; }
  const AntisymBilinearTensor& bracket() const { return bracket_; }

  Vec br(const Vec& u, const Vec& v) const { return bracket_.apply(u, v); }

 private:
  int dim1_, dim2_;
  AntisymBilinearTensor bracket_;
};

/// The four pieces of the bracket plus the bracket of g1, with evaluation helpers.
/// Vectors passed to the helpers are in g1 or g2 coordinates, never full ones.
struct QuasiDoubleParts {
  int dim1 = 0, dim2 = 0;
  AntisymBilinearTensor bracket_g1;  // g1 x g1 -> g1
  AntisymBilinearTensor psi;         // g2 x g2 -> g1
  AntisymBilinearTensor mu;          // g2 x g2 -> g2
  Tensor3 act;                       // g2 x g1 -> g2, x^xi
  Tensor3 coact;                     // g2 x g1 -> g1, xi^x

  Vec br1(const Vec& xi, const Vec& eta) const { return bracket_g1.apply(xi, eta); }
  Vec psi_of(const Vec& x, const Vec& y) const { return psi.apply(x, y); }
  Vec mu_of(const Vec& x, const Vec& y) const { return mu.apply(x, y); }
  Vec act_of(const Vec& x, const Vec& xi) const { return act.contract12(x, xi); }
  Vec coact_of(const Vec& x, const Vec& xi) const { return coact.contract12(x, xi); }
};

QuasiDoubleParts project_components(const QuasiDoubleAlgebra& qd);

/// Full bracket from the pieces; Jacobi is not assumed. InvalidInput on shape mismatch.
QuasiDoubleAlgebra assemble_double(const QuasiDoubleParts& parts);

/// max over basis triples of || [[x,y],z] + [[y,z],x] + [[z,x],y] ||_inf.
double jacobi_check(const AntisymBilinearTensor& bracket);

/// The six identities of the split Jacobi identity, on every basis tuple. Ids "split.*".
std::vector<Measurement> verify_theorem3(const QuasiDoubleAlgebra& qd);

struct AkivisAlgebra {
  int dim = 0;
  AntisymBilinearTensor bracket;  // [x, y]
  Tensor4 triple;                 // <x_i, x_j, x_k> = sum_l triple(i,j,k,l) x_l

  Vec triple_of(const Vec& x, const Vec& y, const Vec& z) const;
  /// max over basis triples of |Alt<x1,x2,x3> - sum_cyc [[x1,x2],x3]|.
  double identity_defect() const;
};

/// bracket = mu, <x, y, z> = 1/2 x^{psi(y, z)}.
AkivisAlgebra akivis_from_quasi_double(const QuasiDoubleAlgebra& qd);

/// Hermitian traceless basis of sh(n), orthonormal for Re tr(X Y).
/// For n = 2: e1 = diag(1,-1)/sqrt2, e2 = [[0,1],[1,0]]/sqrt2, e3 = [[0,i],[-i,0]]/sqrt2.
std::vector<CMatrix> sh_basis(int n);
/// eps_i = i e_i, dual to e_i under <x, xi> = Im tr(x xi).
std::vector<CMatrix> su_basis(int n);

/// Coordinates of the Hermitian part of m on sh_basis: Re tr(m e_i).
Vec sh_coords(const CMatrix& m);
/// Coordinates of the anti-Hermitian part of m on su_basis: Im tr(m e_i).
Vec su_coords(const CMatrix& m);
CMatrix from_sh_coords(const Vec& c, int n);
CMatrix from_su_coords(const Vec& c, int n);

/// sl(n,C) as a real Lie algebra, su(n) basis first then sh(n). n in {2,3,4}.
QuasiDoubleAlgebra sl_n_model(int n);

/// Structure constants in the basis f_a = sum_i B(a,i) b_i. B must keep g1 = span(first dim1)
/// invariant, i.e. B(a, i) = 0 for a < dim1 <= i.
QuasiDoubleAlgebra change_basis(const QuasiDoubleAlgebra& qd, const Eigen::MatrixXd& B);

/// Random well-conditioned adapted basis change: block triangular, with a shear of g2 by g1.
Eigen::MatrixXd random_adapted_basis(int dim1, int dim2, std::uint64_t seed, double shear = 0.5);

}  // namespace lieloop
