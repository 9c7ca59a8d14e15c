#pragma once

// The quasi-double group (SL(n,C), SU(n), SH(n)).
//
// Conventions: a^g = sigma(a, g) and g^a = chi(a, g), read off from
// a g = chi(a, g) sigma(a, g). Every identity below is written with these
// two primitives plus alpha and m, nothing else.

#include <cstdint>
#include <vector>

#include "lieloop/lie_loop.hpp"
#include "lieloop/report.hpp"

namespace lieloop {

/// alpha(a, b) = (ab) m(a, b)^{-1}, the SU factor of ab.
SpecialUnitary alpha(const HermitianPD& a, const HermitianPD& b);

/// sigma(a, g) = (g^{-1} a^2 g)^{1/2}, the SH factor of ag.
HermitianPD sigma(const HermitianPD& a, const SpecialUnitary& g);

/// chi(a, g) = (ag) sigma(a, g)^{-1}, the SU factor of ag.
SpecialUnitary chi(const HermitianPD& a, const SpecialUnitary& g);

struct SweepOptions {
  int n = 2;
  int samples = 64;
  double scale = 0.3;
  std::uint64_t seed = 1;
};

/// alpha(a,b) m(a,b) = ab, and re-projecting g a returns (g, a).
std::vector<Measurement> verify_decomposition(const SweepOptions& opt);

/// The six group identities, ids "group.*".
std::vector<Measurement> verify_theorem1(const SweepOptions& opt);

/// The three translation identities, ids "translate.*".
std::vector<Measurement> verify_corollary1(const SweepOptions& opt);

/// Defects of all nine identities at one explicit tuple (g, h; a, b, c).
/// Order: the six group identities, then the three translation identities.
std::vector<double> identity_defects(const SpecialUnitary& g, const SpecialUnitary& h,
                                     const HermitianPD& a, const HermitianPD& b,
                                     const HermitianPD& c);

}  // namespace lieloop
