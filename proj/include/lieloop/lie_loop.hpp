#pragma once

// The right mono-alternative Lie loop (SH(n), m) with m(a, b) = (b a^2 b)^{1/2}.

#include "lieloop/matrix_core.hpp"

namespace lieloop {

struct LoopModel {
  int n = 2;
  HermitianPD identity() const { return HermitianPD::identity(n); }
};

/// m(a, b) = (b a^2 b)^{1/2}.
HermitianPD loop_mul(const HermitianPD& a, const HermitianPD& b);

/// a \ c: the unique b with m(a, b) = c, namely a^{-1} (a c^2 a)^{1/2} a^{-1}.
HermitianPD loop_left_div(const HermitianPD& a, const HermitianPD& c);

/// c / a: the unique b with m(b, a) = c, namely (a^{-1} c^2 a^{-1})^{1/2}.
HermitianPD loop_right_div(const HermitianPD& c, const HermitianPD& a);

/// Matrix power a^k; agrees with iterated loop multiplication by mono-alternativity.
HermitianPD loop_power(const HermitianPD& a, int k);

/// || m(m(a, b^k), b^l) - m(a, b^{k+l}) ||_F.
double check_mono_alternative(const HermitianPD& a, const HermitianPD& b, int k, int l);

/// Half the second t-derivative at 0 of
///   log( m(exp tx, exp ty) / m(exp ty, exp tx) ),
/// i.e. the loop commutator of x and y. 5-point stencil, one Richardson level.
/// InvalidInput unless 1e-3 <= h <= 1e-1.
CMatrix akivis_commutator_numeric(const CMatrix& x, const CMatrix& y, double h = 1e-2);

}  // namespace lieloop
