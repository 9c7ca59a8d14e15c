#include "lieloop/lie_loop.hpp"

#include <cstdlib>
#include <sstream>

#include "lieloop/finite_difference.hpp"

namespace lieloop {

namespace {

// Products of several HPD factors lose Hermiticity at roughly eps * cond^2.
const Tolerances kProductTol{1e-8, 1e-8, 1e-8};

void require_same_dim(const HermitianPD& a, const HermitianPD& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch " << a.dim() << " vs " << b.dim();
    throw InvalidInput(os.str());
  }
}

CMatrix inverse_of(const HermitianPD& a) { return hermitian_power(a, -1.0).matrix(); }

}  // namespace

HermitianPD loop_mul(const HermitianPD& a, const HermitianPD& b) {
  require_same_dim(a, b, "loop_mul");
  const CMatrix& am = a.matrix();
  const CMatrix& bm = b.matrix();
  return hermitian_sqrt(CMatrix(bm * am * am * bm), kProductTol);
}

HermitianPD loop_left_div(const HermitianPD& a, const HermitianPD& c) {
  require_same_dim(a, c, "loop_left_div");
  const CMatrix& am = a.matrix();
  const CMatrix& cm = c.matrix();
  const CMatrix ai = inverse_of(a);
  const HermitianPD root = hermitian_sqrt(CMatrix(am * cm * cm * am), kProductTol);
  return HermitianPD(CMatrix(ai * root.matrix() * ai), kProductTol);
}

HermitianPD loop_right_div(const HermitianPD& c, const HermitianPD& a) {
  require_same_dim(a, c, "loop_right_div");
  const CMatrix ai = inverse_of(a);
  const CMatrix& cm = c.matrix();
  return hermitian_sqrt(CMatrix(ai * cm * cm * ai), kProductTol);
}

HermitianPD loop_power(const HermitianPD& a, int k) {
  if (k == 0) return HermitianPD::identity(a.dim());
  if (k == 1) return a;
  return hermitian_power(a, static_cast<double>(k));
}

double check_mono_alternative(const HermitianPD& a, const HermitianPD& b, int k, int l) {
  const HermitianPD lhs = loop_mul(loop_mul(a, loop_power(b, k)), loop_power(b, l));
  const HermitianPD rhs = loop_mul(a, loop_power(b, k + l));
  return frobenius_distance(lhs.matrix(), rhs.matrix());
}

CMatrix akivis_commutator_numeric(const CMatrix& x, const CMatrix& y, double h) {
  if (!(h >= 1e-3 && h <= 1e-1)) {
    std::ostringstream os;
    os << "akivis_commutator_numeric: step " << h << " outside [1e-3, 1e-1]";
    throw InvalidInput(os.str());
  }
  if (x.rows() != y.rows() || x.rows() != x.cols() || y.rows() != y.cols())
    throw InvalidInput("akivis_commutator_numeric: shape mismatch");
  auto curve = [&](double t) -> CMatrix {
    const HermitianPD ex(matrix_exp(CMatrix(t * x)), kProductTol);
    const HermitianPD ey(matrix_exp(CMatrix(t * y)), kProductTol);
    return matrix_log_hpd(loop_right_div(loop_mul(ex, ey), loop_mul(ey, ex)));
  };
  CMatrix d2 = fd::central_derivative(curve, 2, h, 5, true);
  d2 *= 0.5;
  return d2;
}

}  // namespace lieloop
