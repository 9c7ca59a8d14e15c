#include <cmath>

#include <gtest/gtest.h>

#include "lieloop/bialgebra_io.hpp"
#include "lieloop/quasi_lie_bialgebra.hpp"
#include "lieloop/suites.hpp"

using namespace lieloop;

namespace {
const double r2 = std::sqrt(2.0);
}

TEST(Sh2Bialgebra, Constants) {
  const BialgebraSpec s = sh2_bialgebra();
  EXPECT_EQ(s.dim, 3);
  EXPECT_EQ(s.mu.max_abs(), 0.0);
  EXPECT_NEAR(s.psi(0, 1, 2), -r2, 1e-15);
  EXPECT_NEAR(s.psi(1, 0, 2), r2, 1e-15);
  // [xi^1, xi^2] = sqrt2 xi^3 and cyclic
  EXPECT_NEAR(s.gamma(2, 0, 1), r2, 1e-15);
  EXPECT_NEAR(s.gamma(0, 1, 2), r2, 1e-15);
  EXPECT_NEAR(s.gamma(1, 0, 2), -r2, 1e-15);
}

TEST(Sh2Bialgebra, AxiomsAndBigBracket) {
  const BialgebraSpec s = sh2_bialgebra();
  EXPECT_LT(check_axioms(s).max(), 1e-12);
  EXPECT_LT(check_prop1(s).max(), 1e-12);
}

TEST(Sh2Bialgebra, DoubleIsSl2) {
  const DoubleLieAlgebra d = build_double(sh2_bialgebra());
  const QuasiDoubleAlgebra m = sl_n_model(2);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int r = 0; r < 6; ++r) {
        const auto perm = [](int i) { return i < 3 ? i + 3 : i - 3; };
        EXPECT_EQ(d.bracket(p, q, r), m.bracket()(perm(p), perm(q), perm(r)));
      }
  EXPECT_LT(jacobi_check(d.bracket), 1e-12);
  EXPECT_LT(check_invariant_pairing(d), 1e-12);
}

TEST(Embedding, RoundTrips) {
  const BialgebraSpec s = generate_specs(2, 4)[0].spec;
  const auto mu = extract_mu(embed_mu(s.mu));
  const auto g = extract_gamma(embed_gamma(s.gamma));
  const auto psi = extract_psi(embed_psi(s.psi));
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      for (int k = 0; k < s.dim; ++k) {
        EXPECT_NEAR(mu(i, j, k), s.mu(i, j, k), 1e-14);
        EXPECT_NEAR(g(i, j, k), s.gamma(i, j, k), 1e-14);
        EXPECT_NEAR(psi(i, j, k), s.psi(i, j, k), 1e-14);
      }
  EXPECT_THROW(extract_mu(embed_psi(s.psi)), InvalidInput);
}

TEST(Equivalence, AxiomsBigBracketAndJacobiOfDouble) {
  // Three independent verdicts on 50 specs: the four axioms, the big-bracket
  // equations, and the Jacobi identity of the double.
  int valid = 0;
  for (const auto& g : generate_specs(50, 99)) {
    const bool ax = check_axioms(g.spec).max() < 1e-10;
    const bool bb = check_prop1(g.spec).max() < 1e-10;
    const bool jac = jacobi_check(assemble_double_bracket(g.spec).bracket) < 1e-10;
    EXPECT_EQ(ax, bb);
    EXPECT_EQ(ax, jac);
    EXPECT_EQ(ax, g.intended_valid);
    valid += ax;
  }
  EXPECT_EQ(valid, 25);
}

TEST(Twist, ProducesQuasiLieBialgebra) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const int dim = 3 + static_cast<int>(s % 2);
    const BialgebraSpec t = twist_construct(random_lie_cobracket(dim, s), random_antisymmetric(dim, s + 100));
    EXPECT_GT(t.mu.max_abs(), 1e-3);
    EXPECT_LT(check_axioms(t).max(), 1e-10);
    const DoubleLieAlgebra d = build_double(t);
    EXPECT_LT(jacobi_check(d.bracket), 1e-10);
    EXPECT_LT(check_invariant_pairing(d), 1e-10);
  }
}

TEST(Twist, RejectsNonLieCobracket) {
  Cobracket g(3);
  g.set(0, 0, 1, 1.0);
  g.set(1, 1, 2, 1.0);
  g.set(2, 0, 2, 1.0);
  ASSERT_GT(check_axioms([&] { auto s = BialgebraSpec::zero(3); s.gamma = g; return s; }()).co_jacobi, 1e-6);
  EXPECT_THROW(twist_construct(g, random_antisymmetric(3, 1)), InvalidInput);
}

TEST(Double, BuildRejectsInvalidSpec) {
  BialgebraSpec s = sh2_bialgebra();
  s.mu.set(0, 1, 2, 0.5);
  EXPECT_THROW(build_double(s), InvalidInput);
}

TEST(Pairing, PsiDoesNotEnterInvariance) {
  BialgebraSpec s = sh2_bialgebra();
  s.psi = Trivector(3);
  EXPECT_LT(check_invariant_pairing(assemble_double_bracket(s)), 1e-12);
}

TEST(Pairing, ScaledActionBlockBreaksInvariance) {
  DoubleLieAlgebra d = build_double(sh2_bialgebra());
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d.bracket.set(a, 3 + i, j, 2.0 * d.bracket(a, 3 + i, j));
  EXPECT_GT(check_invariant_pairing(d), 0.1);
}

TEST(Io, SaveLoadRoundTrip) {
  const BialgebraSpec s = generate_specs(1, 5)[0].spec;
  const BialgebraSpec back = parse_bialgebra(bialgebra_to_json(s));
  EXPECT_EQ(back.mu.tensor().data(), s.mu.tensor().data());
  EXPECT_EQ(back.gamma.tensor().data(), s.gamma.tensor().data());
  EXPECT_EQ(back.psi.tensor().data(), s.psi.tensor().data());
  const std::string path = ::testing::TempDir() + "sh2_roundtrip.json";
  save_bialgebra(sh2_bialgebra(), path);
  EXPECT_EQ(load_bialgebra(path).psi.tensor().data(), sh2_bialgebra().psi.tensor().data());
}

TEST(Io, RejectsMalformedFiles) {
  const std::string zeros = "[[0,0],[0,0]]";
  EXPECT_THROW(parse_bialgebra("{\"dim\": 2,"), FormatError);
  EXPECT_THROW(parse_bialgebra("{\"dim\": 2, \"mu\": [" + zeros + "," + zeros + "]}"), FormatError);
  // diagonal entry mu[0][0][1]
  const std::string bad = "[[[0,1],[0,0]],[[0,0],[0,0]]]";
  const std::string ok = "[" + zeros + "," + zeros + "]";
  try {
    parse_bialgebra("{\"dim\": 2, \"mu\": " + bad + ", \"gamma\": " + ok + ", \"psi\": " + ok + "}");
    FAIL() << "accepted a non-antisymmetric mu";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("[0][0][1]"), std::string::npos) << e.what();
  }
  // psi of the wrong dimension: both shapes are reported
  const std::string big = "[[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]]";
  try {
    parse_bialgebra("{\"dim\": 2, \"mu\": " + ok + ", \"gamma\": " + ok + ", \"psi\": " + big + "}");
    FAIL() << "accepted a dim mismatch";
  } catch (const FormatError& e) {
    const std::string w = e.what();
    EXPECT_NE(w.find("2x2x2"), std::string::npos) << w;
    EXPECT_NE(w.find("3x3x3"), std::string::npos) << w;
  }
}
