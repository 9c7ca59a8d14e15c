#pragma once

// Small dense real tensors for structure constants.

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lieloop {

using Vec = Eigen::VectorXd;

/// Dense rank-3 array, row-major, t(i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2) : d_{d0, d1, d2}, v_(static_cast<std::size_t>(d0) * d1 * d2, 0.0) {}

  int dim(int axis) const { return d_[axis]; }
  double& operator()(int i, int j, int k) { return v_[(static_cast<std::size_t>(i) * d_[1] + j) * d_[2] + k]; }
  double operator()(int i, int j, int k) const { return v_[(static_cast<std::size_t>(i) * d_[1] + j) * d_[2] + k]; }

  /// sum_{ij} x_i y_j t(i, j, :)
  Vec contract12(const Vec& x, const Vec& y) const;
  double max_abs() const;
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::array<int, 3> d_{0, 0, 0};
  std::vector<double> v_;
};

/// Dense rank-4 array t(i, j, k, l).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}
  int dim() const { return n_; }
  double& operator()(int i, int j, int k, int l) { return v_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l]; }
  double operator()(int i, int j, int k, int l) const { return v_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l]; }

 private:
  int n_ = 0;
  std::vector<double> v_;
};

/// c(i, j, k) = -c(j, i, k): a bilinear antisymmetric map R^dim_in x R^dim_in -> R^dim_out.
class AntisymBilinearTensor {
 public:
  AntisymBilinearTensor() = default;
  AntisymBilinearTensor(int dim_in, int dim_out) : t_(dim_in, dim_in, dim_out) {}

  /// Validates exact antisymmetry; InvalidInput naming the first offending (i, j, k).
  static AntisymBilinearTensor from_tensor(const Tensor3& t, const std::string& name = "tensor");

  int dim_in() const { return t_.dim(0); }
  int dim_out() const { return t_.dim(2); }
  double operator()(int i, int j, int k) const { return t_(i, j, k); }
  /// Sets c(i,j,k) = v and c(j,i,k) = -v. i == j requires v == 0.
  void set(int i, int j, int k, double v);
  void add(int i, int j, int k, double v) { set(i, j, k, t_(i, j, k) + v); }

  Vec apply(const Vec& x, const Vec& y) const { return t_.contract12(x, y); }
  const Tensor3& tensor() const { return t_; }
  double max_abs() const { return t_.max_abs(); }

 private:
  Tensor3 t_;
};

/// Totally antisymmetric psi(i, j, k).
class Trivector {
 public:
  Trivector() = default;
  explicit Trivector(int dim) : t_(dim, dim, dim) {}
  static Trivector from_tensor(const Tensor3& t, const std::string& name = "psi");

  int dim() const { return t_.dim(0); }
  double operator()(int i, int j, int k) const { return t_(i, j, k); }
  /// Sets all six permutations with signs.
  void set(int i, int j, int k, double v);
  const Tensor3& tensor() const { return t_; }
  double max_abs() const { return t_.max_abs(); }

 private:
  Tensor3 t_;
};

}  // namespace lieloop
