#pragma once

// Finite-difference stencils on uniform grids, with weights from Fornberg's
// recursion, and one-level Richardson extrapolation.

#include <cmath>
#include <type_traits>
#include <vector>

#include "lieloop/errors.hpp"

namespace lieloop::fd {

/// Weights w_i such that sum_i w_i f(x_i) approximates f^(deriv)(0).
std::vector<double> weights(const std::vector<double>& nodes, int deriv);

/// Nodes -m..m (in units of the step).
std::vector<double> central_nodes(int points);
/// Nodes 0..points-1 (in units of the step).
std::vector<double> forward_nodes(int points);

/// Order of accuracy of a (2m+1)-point central stencil for the given derivative.
int central_accuracy(int points, int deriv);

/// Applies a stencil of unit-step nodes to f with step h. F returns a vector-space value.
template <typename F>
auto apply(F&& f, const std::vector<double>& unit_nodes, int deriv, double h) {
  using Value = std::decay_t<decltype(f(0.0))>;
  const std::vector<double> w = weights(unit_nodes, deriv);
  const double scale = std::pow(h, -deriv);
  Value acc = f(unit_nodes[0] * h);
  acc *= w[0] * scale;
  for (std::size_t i = 1; i < unit_nodes.size(); ++i) {
    if (w[i] == 0.0) continue;
    const Value v = f(unit_nodes[i] * h);
    acc += v * (w[i] * scale);
  }
  return acc;
}

/// Central derivative of order `deriv`, optionally refined by one Richardson level (h, h/2).
template <typename F>
auto central_derivative(F&& f, int deriv, double h, int points = 5, bool richardson = false) {
  const std::vector<double> nodes = central_nodes(points);
  using Value = std::decay_t<decltype(f(0.0))>;
  Value coarse = apply(f, nodes, deriv, h);
  if (!richardson) return coarse;
  Value fine = apply(f, nodes, deriv, 0.5 * h);
  const double factor = std::ldexp(1.0, central_accuracy(points, deriv));
  Value out = fine * factor;
  out -= coarse;
  out *= 1.0 / (factor - 1.0);
  return out;
}

/// Taylor coefficients c_0..c_max_order of f at 0, c_k = f^(k)(0) / k!.
template <typename F>
auto taylor_coefficients(F&& f, int max_order, double h, int points = 7, bool richardson = true) {
  using Value = std::decay_t<decltype(f(0.0))>;
  std::vector<Value> out;
  out.push_back(f(0.0));
  double factorial = 1.0;
  for (int k = 1; k <= max_order; ++k) {
    factorial *= k;
    Value d = central_derivative(f, k, h, points, richardson);
    d *= 1.0 / factorial;
    out.push_back(d);
  }
  return out;
}

}  // namespace lieloop::fd
