#include "lieloop/structure_tensor.hpp"

#include <cmath>
#include <sstream>

#include "lieloop/errors.hpp"

namespace lieloop {

Vec Tensor3::contract12(const Vec& x, const Vec& y) const {
  if (x.size() != d_[0] || y.size() != d_[1]) throw InvalidInput("Tensor3::contract12: shape mismatch");
  Vec out = Vec::Zero(d_[2]);
  for (int i = 0; i < d_[0]; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < d_[1]; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < d_[2]; ++k) out[k] += w * (*this)(i, j, k);
    }
  }
  return out;
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::abs(v));
  return m;
}

AntisymBilinearTensor AntisymBilinearTensor::from_tensor(const Tensor3& t, const std::string& name) {
  if (t.dim(0) != t.dim(1)) {
    std::ostringstream os;
    os << name << ": first two dimensions differ (" << t.dim(0) << " vs " << t.dim(1) << ")";
    throw InvalidInput(os.str());
  }
  for (int i = 0; i < t.dim(0); ++i)
    for (int j = i; j < t.dim(1); ++j)
      for (int k = 0; k < t.dim(2); ++k)
        if (t(i, j, k) != -t(j, i, k)) {
          std::ostringstream os;
          os << name << ": antisymmetry violated at [" << i << "][" << j << "][" << k << "] = " << t(i, j, k);
          if (i == j)
            os << " (diagonal entry must be 0)";
          else
            os << " vs [" << j << "][" << i << "][" << k << "] = " << t(j, i, k);
          throw InvalidInput(os.str());
        }
  AntisymBilinearTensor out;
  out.t_ = t;
  return out;
}

void AntisymBilinearTensor::set(int i, int j, int k, double v) {
  if (i == j) {
    if (v != 0.0) throw InvalidInput("AntisymBilinearTensor::set: diagonal entry must be zero");
    return;
  }
  t_(i, j, k) = v;
  t_(j, i, k) = -v;
}

Trivector Trivector::from_tensor(const Tensor3& t, const std::string& name) {
  const int n = t.dim(0);
  if (t.dim(1) != n || t.dim(2) != n) {
    std::ostringstream os;
    os << name << ": expected a cube, got " << t.dim(0) << "x" << t.dim(1) << "x" << t.dim(2);
    throw InvalidInput(os.str());
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = t(i, j, k);
        if (v != -t(j, i, k) || v != -t(i, k, j) || v != -t(k, j, i)) {
          std::ostringstream os;
          os << name << ": total antisymmetry violated at [" << i << "][" << j << "][" << k << "] = " << v;
          throw InvalidInput(os.str());
        }
      }
  Trivector out;
  out.t_ = t;
  return out;
}

void Trivector::set(int i, int j, int k, double v) {
  if (i == j || j == k || i == k) {
    if (v != 0.0) throw InvalidInput("Trivector::set: repeated index requires zero");
    return;
  }
  t_(i, j, k) = v;
  t_(j, k, i) = v;
  t_(k, i, j) = v;
  t_(j, i, k) = -v;
  t_(i, k, j) = -v;
  t_(k, j, i) = -v;
}

}  // namespace lieloop
