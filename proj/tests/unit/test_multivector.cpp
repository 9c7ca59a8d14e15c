#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lieloop/errors.hpp"
#include "lieloop/multivector.hpp"

using namespace lieloop;

namespace {

// Reference exterior algebra: a term is an ordered list of generators.
using Word = std::vector<int>;
using Poly = std::map<Word, double>;

// Sorts a word by adjacent transpositions; returns 0 if a generator repeats.
int canonical(Word& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return 0;
  return sign;
}

// {u, v} on words: contract a generator of u (moved to the back) with its dual in v
// (moved to the front); <x_i, xi^i> = <xi^i, x_i> = 1.
Poly reference_bracket(const Poly& u, const Poly& v, int n) {
  Poly out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v)
      for (std::size_t a = 0; a < wu.size(); ++a)
        for (std::size_t b = 0; b < wv.size(); ++b) {
          if (std::abs(wu[a] - wv[b]) != n) continue;
          const int sign_u = ((wu.size() - 1 - a) % 2) ? -1 : 1;
          const int sign_v = (b % 2) ? -1 : 1;
          Word w;
          for (std::size_t i = 0; i < wu.size(); ++i)
            if (i != a) w.push_back(wu[i]);
          for (std::size_t j = 0; j < wv.size(); ++j)
            if (j != b) w.push_back(wv[j]);
          const int s = canonical(w);
          if (s) out[w] += s * sign_u * sign_v * cu * cv;
        }
  return out;
}

Poly random_poly(int n, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> gen(0, 2 * n - 1), deg(1, 4);
  std::normal_distribution<double> nd;
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) w.push_back(gen(rng));
    const int s = canonical(w);
    if (s) p[w] += s * nd(rng);
  }
  return p;
}

GradedMultiVector to_mv(const Poly& p, int n) {
  GradedMultiVector out(n);
  for (const auto& [w, c] : p) out += GradedMultiVector::monomial(n, w, c);
  return out;
}

double distance(const GradedMultiVector& a, const Poly& b, int n) {
  return (a - to_mv(b, n)).max_abs();
}

}  // namespace

TEST(MultiVector, MonomialSignsAndRepeats) {
  const int n = 2;
  EXPECT_DOUBLE_EQ(GradedMultiVector::monomial(n, {1, 0}).coefficient(0b11), -1.0);
  EXPECT_TRUE(GradedMultiVector::monomial(n, {1, 1}).is_zero());
  const auto a = GradedMultiVector::monomial(n, {0});
  const auto b = GradedMultiVector::monomial(n, {2});
  EXPECT_EQ((a.wedge(b) + b.wedge(a)).max_abs(), 0.0);
}

TEST(BigBracket, GeneratorPairing) {
  const int n = 3;
  const auto x1 = GradedMultiVector::monomial(n, {0});
  const auto xi1 = GradedMultiVector::monomial(n, {n});
  const auto xi2 = GradedMultiVector::monomial(n, {n + 1});
  EXPECT_DOUBLE_EQ(big_bracket(x1, xi1).coefficient(0), 1.0);
  EXPECT_DOUBLE_EQ(big_bracket(xi1, x1).coefficient(0), 1.0);
  EXPECT_TRUE(big_bracket(x1, xi2).is_zero());
  EXPECT_TRUE(big_bracket(x1, x1).is_zero());
}

TEST(BigBracket, MatchesReferenceOnRandomElements) {
  std::mt19937_64 rng(17);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Poly u = random_poly(n, rng, 5), v = random_poly(n, rng, 5);
      const auto got = big_bracket(to_mv(u, n), to_mv(v, n));
      EXPECT_LT(distance(got, reference_bracket(u, v, n), n), 1e-13) << n << " " << trial;
    }
  }
}

TEST(BigBracket, JacobiOnRandomEvenElements) {
  // Elements of even degree: {u,{v,w}} = {{u,v},w} + {v,{u,w}}.
  std::mt19937_64 rng(23);
  const int n = 3;
  const auto even = [&] {
    Poly p = random_poly(n, rng, 8);
    for (auto it = p.begin(); it != p.end();) it = it->first.size() % 2 ? p.erase(it) : std::next(it);
    return to_mv(p, n);
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = even(), v = even(), w = even();
    const auto lhs = big_bracket(u, big_bracket(v, w));
    const auto rhs = big_bracket(big_bracket(u, v), w) + big_bracket(v, big_bracket(u, w));
    EXPECT_LT((lhs - rhs).max_abs(), 1e-12);
  }
}

TEST(BigBracket, DerivativesMoveGenerator) {
  const int n = 2;
  const auto m = GradedMultiVector::monomial(n, {0, 1, 3});
  EXPECT_DOUBLE_EQ(m.left_derivative(1).coefficient((1u << 0) | (1u << 3)), -1.0);
  EXPECT_DOUBLE_EQ(m.right_derivative(1).coefficient((1u << 0) | (1u << 3)), -1.0);
  EXPECT_DOUBLE_EQ(m.left_derivative(0).coefficient((1u << 1) | (1u << 3)), 1.0);
  EXPECT_DOUBLE_EQ(m.right_derivative(0).coefficient((1u << 1) | (1u << 3)), 1.0);
}

TEST(MultiVector, RejectsBadDimension) {
  EXPECT_THROW(GradedMultiVector{0}, InvalidInput);
  EXPECT_THROW(GradedMultiVector{9}, InvalidInput);
}
