#include "lieloop/finite_difference.hpp"

namespace lieloop::fd {

std::vector<double> weights(const std::vector<double>& nodes, int deriv) {
  const int n = static_cast<int>(nodes.size());
  if (deriv < 0 || deriv >= n) throw InvalidInput("fd::weights: derivative order exceeds stencil size");
  // Fornberg (1988), evaluated at x0 = 0.
  std::vector<std::vector<double>> c(n, std::vector<double>(deriv + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, deriv);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = c[i][deriv];
  return out;
}

std::vector<double> central_nodes(int points) {
  if (points < 3 || points % 2 == 0) throw InvalidInput("fd::central_nodes: need an odd count >= 3");
  const int m = points / 2;
  std::vector<double> nodes;
  for (int i = -m; i <= m; ++i) nodes.push_back(static_cast<double>(i));
  return nodes;
}

std::vector<double> forward_nodes(int points) {
  if (points < 2) throw InvalidInput("fd::forward_nodes: need at least 2 points");
  std::vector<double> nodes;
  for (int i = 0; i < points; ++i) nodes.push_back(static_cast<double>(i));
  return nodes;
}

int central_accuracy(int points, int deriv) {
  const int m = points / 2;
  return 2 * (m - (deriv - 1) / 2);
}

}  // namespace lieloop::fd
