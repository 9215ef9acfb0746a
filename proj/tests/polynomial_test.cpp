#include "qflag/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qflag;

namespace {

Polynomial random_polynomial(std::mt19937 &rng, std::size_t nvars, int terms) {
  Polynomial p(nvars);
  std::uniform_int_distribution<int> exp(0, 3), coef(-5, 5), den(1, 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t v = 0; v < nvars; ++v)
      m.set(v, exp(rng));
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

} // namespace

TEST(Monomial, Arithmetic) {
  Monomial a{1, 2, 0}, b{0, 1, 3};
  EXPECT_EQ(a * b, (Monomial{1, 3, 3}));
  EXPECT_EQ((a * b).degree(), 7);
  EXPECT_TRUE(a.divides(a * b));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.quotient_of(a * b), b);
  Monomial big;
  big.set(0, 200);
  EXPECT_THROW(big * big, ValidationError);
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_polynomial(rng, 3, 5), b = random_polynomial(rng, 3, 4), c = random_polynomial(rng, 3, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  Polynomial p = Polynomial::variable(2, 0) + Polynomial::variable(2, 1);
  p -= Polynomial::variable(2, 1);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(Monomial{0, 1}), 0);
}

TEST(Polynomial, ExactRationals) {
  Polynomial p = Polynomial::constant(1, Rational(1, 3)) * Rational(3);
  EXPECT_EQ(p, Polynomial::constant(1, 1));
}

TEST(Polynomial, ElementarySymmetric) {
  std::vector<std::size_t> vars{0, 1, 2};
  // prod (1 + x_i) = sum e_k.
  Polynomial prod = Polynomial::constant(3, 1);
  for (auto v : vars)
    prod = prod * (Polynomial::constant(3, 1) + Polynomial::variable(3, v));
  Polynomial sum(3);
  for (int k = 0; k <= 3; ++k)
    sum += elementary_symmetric(3, vars, k);
  EXPECT_EQ(prod, sum);
  EXPECT_TRUE(elementary_symmetric(3, vars, 4).is_zero());
}

TEST(Polynomial, Permutation) {
  Polynomial p = Polynomial::monomial(3, Monomial{2, 1, 0});
  std::vector<std::size_t> perm{1, 0, 2};
  EXPECT_EQ(p.permuted(perm), Polynomial::monomial(3, Monomial{1, 2, 0}));
}
