#include "lieloop/multivector.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "lieloop/errors.hpp"

namespace lieloop {

GradedMultiVector::GradedMultiVector(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    std::ostringstream os;
    os << "GradedMultiVector: dim " << dim << " outside [1, " << kMaxDim << "]";
    throw InvalidInput(os.str());
  }
}

GradedMultiVector GradedMultiVector::monomial(int dim, const std::vector<int>& gens, double c) {
  GradedMultiVector out(dim);
  std::uint32_t mask = 0;
  int sign = 1;
  for (int g : gens) {
    if (g < 0 || g >= 2 * dim) throw InvalidInput("GradedMultiVector::monomial: generator out of range");
    const std::uint32_t bit = 1u << g;
    if (mask & bit) return out;
    sign *= product_sign(mask, bit);
    mask |= bit;
  }
  out.add_term(mask, sign * c);
  return out;
}

GradedMultiVector GradedMultiVector::scalar(int dim, double c) {
  GradedMultiVector out(dim);
  out.add_term(0, c);
  return out;
}

double GradedMultiVector::coefficient(std::uint32_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? 0.0 : it->second;
}

void GradedMultiVector::add_term(std::uint32_t mask, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double GradedMultiVector::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

GradedMultiVector& GradedMultiVector::operator+=(const GradedMultiVector& o) {
  if (o.dim_ != dim_) throw InvalidInput("GradedMultiVector: dimension mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  prune();
  return *this;
}

GradedMultiVector& GradedMultiVector::operator-=(const GradedMultiVector& o) {
  if (o.dim_ != dim_) throw InvalidInput("GradedMultiVector: dimension mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  prune();
  return *this;
}

GradedMultiVector& GradedMultiVector::operator*=(double s) {
  for (auto& [k, c] : terms_) c *= s;
  prune();
  return *this;
}

int GradedMultiVector::degree(std::uint32_t mask) { return std::popcount(mask); }

int GradedMultiVector::product_sign(std::uint32_t a, std::uint32_t b) {
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  int swaps = 0;
  while (b) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

GradedMultiVector GradedMultiVector::wedge(const GradedMultiVector& o) const {
  if (o.dim_ != dim_) throw InvalidInput("GradedMultiVector::wedge: dimension mismatch");
  GradedMultiVector out(dim_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      if (a & b) continue;
      out.add_term(a | b, product_sign(a, b) * ca * cb);
    }
  out.prune();
  return out;
}

GradedMultiVector GradedMultiVector::left_derivative(int g) const {
  GradedMultiVector out(dim_);
  const std::uint32_t bit = 1u << g;
  for (const auto& [a, c] : terms_) {
    if (!(a & bit)) continue;
    const int s = std::popcount(a & (bit - 1)) & 1;
    out.add_term(a & ~bit, s ? -c : c);
  }
  return out;
}

GradedMultiVector GradedMultiVector::right_derivative(int g) const {
  GradedMultiVector out(dim_);
  const std::uint32_t bit = 1u << g;
  for (const auto& [a, c] : terms_) {
    if (!(a & bit)) continue;
    const int s = std::popcount(a >> (g + 1)) & 1;
    out.add_term(a & ~bit, s ? -c : c);
  }
  return out;
}

void GradedMultiVector::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < kPrune)
      it = terms_.erase(it);
    else
      ++it;
  }
}

GradedMultiVector big_bracket(const GradedMultiVector& u, const GradedMultiVector& v) {
  if (u.dim() != v.dim()) throw InvalidInput("big_bracket: dimension mismatch");
  const int n = u.dim();
  GradedMultiVector out(n);
  for (int i = 0; i < n; ++i) {
    out += u.right_derivative(i).wedge(v.left_derivative(n + i));
    out += u.right_derivative(n + i).wedge(v.left_derivative(i));
  }
  return out;
}

}  // namespace lieloop
