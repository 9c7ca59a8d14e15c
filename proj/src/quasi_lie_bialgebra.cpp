#include "lieloop/quasi_lie_bialgebra.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lieloop {

Cobracket Cobracket::from_tensor(const Tensor3& t, const std::string& name) {
  const int n = t.dim(0);
  if (t.dim(1) != n || t.dim(2) != n) {
    std::ostringstream os;
    os << name << ": expected a cube, got " << t.dim(0) << "x" << t.dim(1) << "x" << t.dim(2);
    throw InvalidInput(os.str());
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (t(k, i, j) != -t(k, j, i)) {
          std::ostringstream os;
          os << name << ": antisymmetry violated at [" << k << "][" << i << "][" << j << "] = " << t(k, i, j);
          if (i == j)
            os << " (diagonal entry must be 0)";
          else
            os << " vs [" << k << "][" << j << "][" << i << "] = " << t(k, j, i);
          throw InvalidInput(os.str());
        }
  Cobracket out;
  out.t_ = t;
  return out;
}

void Cobracket::set(int k, int i, int j, double v) {
  if (i == j) {
    if (v != 0.0) throw InvalidInput("Cobracket::set: diagonal entry must be zero");
    return;
  }
  t_(k, i, j) = v;
  t_(k, j, i) = -v;
}

Vec Cobracket::dual_bracket(const Vec& xi, const Vec& eta) const {
  const int n = dim();
  Vec out = Vec::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[k] += t_(k, i, j) * xi[i] * eta[j];
  return out;
}

Eigen::MatrixXd Cobracket::apply(const Vec& x) const {
  const int n = dim();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
    if (x[k] != 0.0)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) += x[k] * t_(k, i, j);
  return w;
}

BialgebraSpec BialgebraSpec::zero(int dim) {
  if (dim < 1 || dim > GradedMultiVector::kMaxDim) throw InvalidInput("BialgebraSpec: dim out of range");
  return BialgebraSpec{dim, AntisymBilinearTensor(dim, dim), Cobracket(dim), Trivector(dim)};
}

void BialgebraSpec::validate_shape() const {
  std::ostringstream os;
  if (dim < 1 || dim > GradedMultiVector::kMaxDim) os << "dim " << dim << " out of range; ";
  if (mu.dim_in() != dim || mu.dim_out() != dim)
    os << "mu has shape " << mu.dim_in() << "x" << mu.dim_in() << "x" << mu.dim_out() << "; ";
  if (gamma.dim() != dim) os << "gamma has dimension " << gamma.dim() << "; ";
  if (psi.dim() != dim) os << "psi has dimension " << psi.dim() << "; ";
  const std::string msg = os.str();
  if (!msg.empty()) throw InvalidInput("BialgebraSpec (dim " + std::to_string(dim) + "): " + msg);
}

double AxiomDefects::max() const { return std::max({co_jacobi, derivation, mu_jacobiator, psi_closed}); }
double Prop1Defects::max() const { return std::max({gg, gm, mm_gp, mp}); }

namespace {

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v[i] = 1.0;
  return v;
}

// psi(u, v, w) for vectors in F.
double psi3(const Trivector& psi, const Vec& u, const Vec& v, const Vec& w) {
  const int n = psi.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    if (u[i] != 0.0)
      for (int j = 0; j < n; ++j)
        if (v[j] != 0.0)
          for (int k = 0; k < n; ++k) s += u[i] * v[j] * w[k] * psi(i, j, k);
  return s;
}

Vec mu_col(const BialgebraSpec& s, int a, int b) {
  Vec v(s.dim);
  for (int k = 0; k < s.dim; ++k) v[k] = s.mu(a, b, k);
  return v;
}

double sign_of(int dim, const std::vector<int>& order, std::uint32_t mask) {
  return GradedMultiVector::monomial(dim, order).coefficient(mask);
}

void split_mask(std::uint32_t mask, int n, std::vector<int>& xs, std::vector<int>& xis) {
  xs.clear();
  xis.clear();
  for (int g = 0; g < 2 * n; ++g)
    if (mask >> g & 1u) (g < n ? xs : xis).push_back(g < n ? g : g - n);
}

[[noreturn]] void wrong_type(const char* what, std::uint32_t mask) {
  std::ostringstream os;
  os << what << ": unexpected monomial with mask " << mask;
  throw InvalidInput(os.str());
}

}  // namespace

AxiomDefects check_axioms(const BialgebraSpec& s) {
  s.validate_shape();
  const int n = s.dim;
  AxiomDefects d;
  const auto& g = s.gamma;
  // (1) Jacobi of the dual bracket on F*.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int i = 0; i < n; ++i) {
          double j = 0.0;
          for (int k = 0; k < n; ++k)
            j += g(k, a, b) * g(i, k, c) + g(k, b, c) * g(i, k, a) + g(k, c, a) * g(i, k, b);
          d.co_jacobi = std::max(d.co_jacobi, std::abs(j));
        }
  // (2) gamma(mu(x,y)) = mu(gamma(x), y) + mu(x, gamma(y)), mu acting on each tensor leg.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXd A(n, n), B(n, n);
      for (int p = 0; p < n; ++p)
        for (int j = 0; j < n; ++j) {
          A(p, j) = s.mu(j, b, p);
          B(p, j) = s.mu(a, j, p);
        }
      const Eigen::MatrixXd wa = g.apply(unit(n, a)), wb = g.apply(unit(n, b));
      const Eigen::MatrixXd r = g.apply(mu_col(s, a, b)) - (A * wa + wa * A.transpose()) -
                                (B * wb + wb * B.transpose());
      d.derivation = std::max(d.derivation, r.cwiseAbs().maxCoeff());
    }
  // (3) co-Jacobiator of mu^t against the gamma-coadjoint action on psi.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        Vec r = Vec::Zero(n);
        for (const auto& t : cyc) {
          const Vec mab = mu_col(s, t[0], t[1]);
          r += s.mu.apply(mab, unit(n, t[2]));
          for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) r[i] -= s.psi(t[0], t[1], k) * g(t[2], k, i);
        }
        d.mu_jacobiator = std::max(d.mu_jacobiator, r.cwiseAbs().maxCoeff());
      }
  // (4) full alternation of psi(mu(., .), ., .).
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
          double r = 0.0;
          for (const auto& t : cyc) {
            const Vec u = unit(n, t[0]), v = unit(n, t[1]), w = unit(n, t[2]), xe = unit(n, e);
            r += psi3(s.psi, mu_col(s, t[0], t[1]), w, xe);
            r += psi3(s.psi, u, v, mu_col(s, t[2], e));
          }
          d.psi_closed = std::max(d.psi_closed, std::abs(r));
        }
  return d;
}

GradedMultiVector embed_mu(const AntisymBilinearTensor& mu) {
  const int n = mu.dim_in();
  GradedMultiVector out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mu(i, j, k) != 0.0) out += GradedMultiVector::monomial(n, {n + i, n + j, k}, mu(i, j, k));
  return out;
}

GradedMultiVector embed_gamma(const Cobracket& gamma) {
  const int n = gamma.dim();
  GradedMultiVector out(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (gamma(k, i, j) != 0.0) out += GradedMultiVector::monomial(n, {n + k, i, j}, gamma(k, i, j));
  return out;
}

GradedMultiVector embed_psi(const Trivector& psi) {
  const int n = psi.dim();
  GradedMultiVector out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (psi(i, j, k) != 0.0) out += GradedMultiVector::monomial(n, {n + i, n + j, n + k}, psi(i, j, k));
  return out;
}

GradedMultiVector embed_omega(const Eigen::MatrixXd& omega) {
  const int n = static_cast<int>(omega.rows());
  GradedMultiVector out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (omega(i, j) != 0.0) out += GradedMultiVector::monomial(n, {n + i, n + j}, omega(i, j));
  return out;
}

AntisymBilinearTensor extract_mu(const GradedMultiVector& v) {
  const int n = v.dim();
  AntisymBilinearTensor mu(n, n);
  std::vector<int> xs, xis;
  for (const auto& [mask, c] : v.terms()) {
    split_mask(mask, n, xs, xis);
    if (xs.size() != 1 || xis.size() != 2) wrong_type("extract_mu", mask);
    mu.set(xis[0], xis[1], xs[0], c * sign_of(n, {n + xis[0], n + xis[1], xs[0]}, mask));
  }
  return mu;
}

Cobracket extract_gamma(const GradedMultiVector& v) {
  const int n = v.dim();
  Cobracket g(n);
  std::vector<int> xs, xis;
  for (const auto& [mask, c] : v.terms()) {
    split_mask(mask, n, xs, xis);
    if (xs.size() != 2 || xis.size() != 1) wrong_type("extract_gamma", mask);
    g.set(xis[0], xs[0], xs[1], c * sign_of(n, {n + xis[0], xs[0], xs[1]}, mask));
  }
  return g;
}

Trivector extract_psi(const GradedMultiVector& v) {
  const int n = v.dim();
  Trivector psi(n);
  std::vector<int> xs, xis;
  for (const auto& [mask, c] : v.terms()) {
    split_mask(mask, n, xs, xis);
    if (!xs.empty() || xis.size() != 3) wrong_type("extract_psi", mask);
    psi.set(xis[0], xis[1], xis[2], c * sign_of(n, {n + xis[0], n + xis[1], n + xis[2]}, mask));
  }
  return psi;
}

Prop1Defects check_prop1(const BialgebraSpec& s) {
  s.validate_shape();
  const GradedMultiVector m = embed_mu(s.mu), g = embed_gamma(s.gamma), p = embed_psi(s.psi);
  Prop1Defects d;
  d.gg = big_bracket(g, g).max_abs();
  d.gm = big_bracket(g, m).max_abs();
  d.mm_gp = (0.5 * big_bracket(m, m) + big_bracket(g, p)).max_abs();
  d.mp = big_bracket(m, p).max_abs();
  return d;
}

DoubleLieAlgebra assemble_double_bracket(const BialgebraSpec& s) {
  s.validate_shape();
  const int n = s.dim, N = 2 * n;
  AntisymBilinearTensor b(N, N);
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c)
      for (int k = 0; k < n; ++k) {
        b.set(a, c, k, s.mu(a, c, k));
        b.set(a, c, n + k, s.psi(a, c, k));
      }
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        b.set(a, n + i, j, s.gamma(a, i, j));
        b.set(a, n + i, n + j, -s.mu(a, j, i));
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) b.set(n + i, n + j, n + k, s.gamma(k, i, j));
  return DoubleLieAlgebra{N, std::move(b)};
}

DoubleLieAlgebra build_double(const BialgebraSpec& spec, double tol) {
  const AxiomDefects d = check_axioms(spec);
  if (!(d.max() < tol)) {
    std::ostringstream os;
    os << "build_double: axioms fail (co-Jacobi " << d.co_jacobi << ", derivation " << d.derivation
       << ", mu-Jacobiator " << d.mu_jacobiator << ", psi " << d.psi_closed << ")";
    throw InvalidInput(os.str());
  }
  return assemble_double_bracket(spec);
}

double check_invariant_pairing(const DoubleLieAlgebra& d) {
  const int N = d.dim, n = N / 2;
  if (N % 2 != 0 || d.bracket.dim_in() != N) throw InvalidInput("check_invariant_pairing: bad shape");
  const auto dual = [n](int p) { return p < n ? p + n : p - n; };
  double worst = 0.0;
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v)
      for (int w = 0; w < N; ++w) {
        // <M(u,v), w> picks the component of M(u,v) along the dual of w.
        const double r = d.bracket(u, v, dual(w)) + d.bracket(u, w, dual(v));
        worst = std::max(worst, std::abs(r));
      }
  return worst;
}

BialgebraSpec twist_construct(const Cobracket& gamma, const Eigen::MatrixXd& omega, double tol) {
  const int n = gamma.dim();
  if (omega.rows() != n || omega.cols() != n) throw InvalidInput("twist_construct: omega has wrong shape");
  if ((omega + omega.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw InvalidInput("twist_construct: omega must be antisymmetric");
  BialgebraSpec zero = BialgebraSpec::zero(n);
  zero.gamma = gamma;
  const double cj = check_axioms(zero).co_jacobi;
  const double scale = std::max(1.0, gamma.max_abs() * gamma.max_abs());
  if (!(cj < tol * scale)) {
    std::ostringstream os;
    os << "twist_construct: gamma fails co-Jacobi (defect " << cj << ")";
    throw InvalidInput(os.str());
  }
  const GradedMultiVector g = embed_gamma(gamma), w = embed_omega(omega);
  const GradedMultiVector m = big_bracket(w, g);
  const GradedMultiVector p = 0.5 * big_bracket(w, m);
  BialgebraSpec out{n, extract_mu(m), gamma, extract_psi(p)};
  return out;
}

BialgebraSpec sh2_bialgebra() {
  const QuasiDoubleParts parts = project_components(sl_n_model(2));
  BialgebraSpec s = BialgebraSpec::zero(3);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) s.gamma.set(k, i, j, parts.bracket_g1(i, j, k));
  s.psi.set(0, 1, 2, parts.psi(0, 1, 2));
  return s;
}

Cobracket random_lie_cobracket(int dim, std::uint64_t seed) {
  if (dim < 1 || dim > GradedMultiVector::kMaxDim) throw InvalidInput("random_lie_cobracket: dim out of range");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Tensor3 c(dim, dim, dim);  // [e_i, e_j] = sum_k c(i,j,k) e_k
  if (dim >= 3 && (seed & 1u)) {
    // su(2) plus an abelian summand
    const double s = 0.5 + std::abs(nd(rng));
    const int t[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& r : t) {
      c(r[0], r[1], r[2]) = s;
      c(r[1], r[0], r[2]) = -s;
    }
  } else {
    // R acting on R^{dim-1} by a random matrix
    for (int i = 1; i < dim; ++i)
      for (int j = 1; j < dim; ++j) {
        const double v = nd(rng);
        c(0, i, j) = v;
        c(i, 0, j) = -v;
      }
  }
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int i = 0; i < dim; ++i) B(a, i) += 0.3 * nd(rng);
  const Eigen::MatrixXd inv = B.inverse();
  Cobracket g(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      Vec w = Vec::Zero(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          for (int k = 0; k < dim; ++k) w[k] += B(a, i) * B(b, j) * c(i, j, k);
      const Vec v = inv.transpose() * w;
      for (int k = 0; k < dim; ++k) g.set(k, a, b, v[k]);
    }
  return g;
}

Eigen::MatrixXd random_antisymmetric(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      w(i, j) = nd(rng);
      w(j, i) = -w(i, j);
    }
  return w;
}

}  // namespace lieloop
