#pragma once

// Exterior algebra on F + F* with the big bracket.
//
// Generators are numbered 0..2*dim-1: x_i is generator i, xi^i is generator
// dim + i. A monomial is the bitmask of its generators, read in increasing
// generator order; every term is stored in that canonical order.

#include <cstdint>
#include <map>
#include <vector>

namespace lieloop {

class GradedMultiVector {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr double kPrune = 1e-14;

  explicit GradedMultiVector(int dim);

  /// Ordered product g_0 g_1 ... of generators, times c. Zero if a generator repeats.
  static GradedMultiVector monomial(int dim, const std::vector<int>& gens, double c = 1.0);
  static GradedMultiVector scalar(int dim, double c);

  int dim() const { return dim_; }
  const std::map<std::uint32_t, double>& terms() const { return terms_; }
  double coefficient(std::uint32_t mask) const;
  void add_term(std::uint32_t mask, double c);
  double max_abs() const;
  bool is_zero() const { return terms_.empty(); }

  GradedMultiVector& operator+=(const GradedMultiVector& o);
  GradedMultiVector& operator-=(const GradedMultiVector& o);
  GradedMultiVector& operator*=(double s);
  friend GradedMultiVector operator+(GradedMultiVector a, const GradedMultiVector& b) { return a += b; }
  friend GradedMultiVector operator-(GradedMultiVector a, const GradedMultiVector& b) { return a -= b; }
  friend GradedMultiVector operator*(double s, GradedMultiVector a) { return a *= s; }

  /// Exterior product.
  GradedMultiVector wedge(const GradedMultiVector& o) const;
  /// Derivative with respect to generator g acting from the left (g moved to the front).
  GradedMultiVector left_derivative(int g) const;
  /// Derivative with respect to generator g acting from the right (g moved to the back).
  GradedMultiVector right_derivative(int g) const;

  /// Drops terms with |c| < kPrune.
  void prune();

  /// Sign of the canonical reordering of a product of two canonical monomials.
  static int product_sign(std::uint32_t a, std::uint32_t b);
  static int degree(std::uint32_t mask);

 private:
  int dim_;
  std::map<std::uint32_t, double> terms_;
};

/// {u, v} = sum_i (u d<-/dx_i)(d->/dxi^i v) + (u d<-/dxi^i)(d->/dx_i v), so {x_i, xi^j} = delta_ij.
GradedMultiVector big_bracket(const GradedMultiVector& u, const GradedMultiVector& v);

}  // namespace lieloop
