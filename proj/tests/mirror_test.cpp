#include "checks.hpp"
#include "corpus.hpp"
#include "qflag/mirror.hpp"

#include <gtest/gtest.h>

using namespace qflag;
using namespace qflag::fixtures;

namespace {

using Exps = LaurentExpression::Exponents;

/// Hori-Vafa potential of P^{n-1}: x_2 + ... + x_n + q / (x_2 ... x_n),
/// in the layout [x_1..x_n][q].
LaurentExpression projective_potential(int n) {
  LaurentExpression w(n + 1);
  Exps last(n + 1, 0);
  for (int a = 1; a < n; ++a) {
    Exps e(n + 1, 0);
    e[a] = 1;
    w.add(e, 1);
    last[a] = -1;
  }
  last[n] = 1;
  w.add(last, 1);
  return w;
}

} // namespace

TEST(Mirror, ProjectiveSpaceIsHoriVafa) {
  for (int n = 2; n <= 6; ++n) {
    Superpotential sp{Quiver(projective(n))};
    EXPECT_TRUE(sp.roots().empty());
    EXPECT_EQ(sp.fiber_potential(), projective_potential(n)) << "n=" << n;
    auto locus = critical_relations(sp);
    ASSERT_EQ(locus.relations.size(), 1u);
    // x^n - q.
    Monomial xn, q1;
    xn.set(0, n);
    q1.set(1, 1);
    Polynomial want = Polynomial::monomial(2, xn) - Polynomial::monomial(2, q1);
    EXPECT_EQ(locus.relations[0], want);
  }
}

TEST(Mirror, ProjectiveLineText) {
  Superpotential sp{Quiver(projective(2))};
  std::string text = emit_mirror(sp);
  EXPECT_NE(text.find("\n1 * x[2]\n"), std::string::npos) << text;
  EXPECT_NE(text.find("\n1 * x[2]^-1 * q[1]\n"), std::string::npos) << text;
  EXPECT_NE(text.find("subject to: x[1] * x[2] = q[1]"), std::string::npos) << text;
  EXPECT_NE(text.find("critical: x[1] = x[2]^-1 * q[1]"), std::string::npos) << text;
}

TEST(Mirror, GrassmannianAbelianizationWithoutRoots) {
  // Dropping the root variables leaves the potential of a product of
  // projective spaces, one factor per Chern root.
  for (auto [n, r] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 3}}) {
    Quiver q(grassmannian(n, r));
    Superpotential sp(q);
    EXPECT_EQ(sp.roots().size(), static_cast<std::size_t>(r * (r - 1)));
    std::map<Exps, Rational> stripped;
    for (const auto &[e, c] : sp.fiber_potential().terms()) {
      bool only_y = true;
      for (std::size_t a = 0; a < sp.num_arrows(); ++a)
        only_y = only_y && e[a] == 0;
      if (only_y && e[sp.q_var(1)] == 0)
        continue; // a root variable term
      Exps x(e.begin(), e.begin() + sp.num_arrows());
      x.push_back(e[sp.q_var(1)]);
      stripped[x] += c;
    }
    std::map<Exps, Rational> want;
    for (int j = 1; j <= r; ++j) {
      Exps last(sp.num_arrows() + 1, 0);
      last.back() = 1;
      for (std::size_t a = 0; a < sp.num_arrows(); ++a) {
        const auto &arr = sp.abelianized().arrows[a];
        if (arr.target.copy != j || sp.is_basis_arrow(a))
          continue;
        Exps e(sp.num_arrows() + 1, 0);
        e[a] = 1;
        want[e] += 1;
        last[a] = -1;
      }
      want[last] += 1;
    }
    EXPECT_EQ(stripped, want) << "Gr(" << n << "," << r << ")";
  }
}

TEST(Mirror, ToricQuiverHasNoRoots) {
  Superpotential sp{Quiver(toric_triangle())};
  EXPECT_TRUE(sp.roots().empty());
  EXPECT_EQ(sp.potential().terms().size(), sp.num_arrows());
}

TEST(Mirror, ConstraintsHaveOneEntryPerVertex) {
  Quiver q(flag(4, {2, 1}));
  Superpotential sp(q);
  EXPECT_EQ(sp.constraints().size(), 3u);
  EXPECT_EQ(sp.roots().size(), 2u);
  // Each solved basis monomial is free of basis arrows.
  for (const auto &e : sp.solved())
    for (auto a : sp.basis_arrows())
      EXPECT_EQ(e[a], 0);
}

TEST(Mirror, RejectsNonFano) {
  Quiver q(QuiverSpec{2, {1, 1}, {{0, 1, 2}, {1, 2, 3}}});
  EXPECT_THROW(Superpotential{q}, ValidationError);
}

TEST(Mirror, RejectsImpossibleBasisChoice) {
  Quiver q(flag(4, {2, 1}));
  EXPECT_THROW(Superpotential(q, {0, 0}), ValidationError);
}

TEST(Mirror, RootSignsAndParametrization) {
  for (const auto &entry : corpus()) {
    Quiver q(entry.spec);
    auto locus = critical_relations(Superpotential(q));
    EXPECT_TRUE(locus.parametrization_ok) << entry.name;
    for (int i = 1; i <= q.rho(); ++i)
      EXPECT_EQ(locus.signs[i - 1], sign_of_power(q.rank(i) - 1)) << entry.name;
  }
}

TEST(Mirror, IdealMatchesOracle) {
  for (const auto &entry : corpus()) {
    auto t = mirror_ideal(Quiver(entry.spec));
    EXPECT_TRUE(t.ok()) << entry.name << ": " << t.first_failure;
  }
}

TEST(Mirror, OtherBasisChoiceGivesSameIdeal) {
  auto t = mirror_ideal(Quiver(toric_triangle()), {0, 1});
  EXPECT_TRUE(t.ok()) << t.first_failure;
}

TEST(Mirror, DivisionRemainder) {
  Quiver q(projective(3));
  auto order = WeightedOrder::for_quiver(q);
  Monomial x3, x2, q1;
  x3.set(0, 3);
  x2.set(0, 2);
  q1.set(1, 1);
  Polynomial g = Polynomial::monomial(2, x3) - Polynomial::monomial(2, q1);
  EXPECT_TRUE(divide(g * g, {g}, order).is_zero());
  EXPECT_EQ(divide(Polynomial::monomial(2, x2), {g}, order), Polynomial::monomial(2, x2));
}
