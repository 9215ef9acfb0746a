#include "checks.hpp"
#include "corpus.hpp"
#include "ring_helpers.hpp"
#include "qflag/abelian_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace qflag;
using namespace qflag::fixtures;

namespace {

const Partition p1{1}, p2{2}, p11{1, 1}, p21{2, 1}, p22{2, 2};

Polynomial x(const AbelianOracle &o, int i, int j) { return Polynomial::variable(o.nvars(), o.x_index(i, j)); }
Polynomial qv(const AbelianOracle &o, int i) { return Polynomial::variable(o.nvars(), o.q_index(i)); }

Polynomial power(Polynomial p, int e) {
  Polynomial out = Polynomial::constant(p.nvars(), 1);
  for (int k = 0; k < e; ++k)
    out = out * p;
  return out;
}

} // namespace

TEST(Oracle, ProjectiveSpaceRules) {
  Quiver q(projective(4));
  AbelianOracle o(q);
  EXPECT_EQ(o.nvars(), 2u);
  auto x4 = power(x(o, 1, 1), 4);
  EXPECT_EQ(o.normal_form(x4, Mode::quantum), qv(o, 1));
  EXPECT_TRUE(o.normal_form(x4, Mode::classical).is_zero());
  auto x3 = power(x(o, 1, 1), 3);
  EXPECT_EQ(o.normal_form(x3, Mode::quantum), x3);
}

TEST(Oracle, FlagRuleShape) {
  Quiver q(flag(4, {2, 1}));
  AbelianOracle o(q);
  // x_11^4 = -q_1 (x_21 - x_11) after expansion: quantum part only.
  EXPECT_EQ(o.rule(Mode::quantum, 1, 1), qv(o, 1) * (x(o, 1, 1) - x(o, 2, 1)));
  EXPECT_TRUE(o.rule(Mode::classical, 1, 1).is_zero());
  // x_21^2 = (x_11 + x_12) x_21 - x_11 x_12 + q_2.
  EXPECT_EQ(o.rule(Mode::quantum, 2, 1),
            (x(o, 1, 1) + x(o, 1, 2)) * x(o, 2, 1) - x(o, 1, 1) * x(o, 1, 2) + qv(o, 2));
  for (Mode m : {Mode::classical, Mode::quantum})
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= q.rank(i); ++j)
        for (const auto &[mono, c] : o.rule(m, i, j).terms())
          EXPECT_LT(mono[o.x_index(i, j)], q.s(i));
}

TEST(Oracle, Lift) {
  Quiver q(grassmannian(5, 2));
  AbelianOracle o(q);
  EXPECT_EQ(o.lift(SchurTuple{p1}), x(o, 1, 1) + x(o, 1, 2));
  EXPECT_EQ(o.lift(SchurTuple{p11}), x(o, 1, 1) * x(o, 1, 2));
  EXPECT_EQ(o.lift(SchurTuple{Partition()}), Polynomial::constant(o.nvars(), 1));
}

TEST(Oracle, Omega) {
  AbelianOracle gr{Quiver(grassmannian(4, 2))};
  EXPECT_EQ(gr.omega(), x(gr, 1, 1) - x(gr, 1, 2));
  AbelianOracle toric{Quiver(toric_triangle())};
  EXPECT_EQ(toric.omega(), Polynomial::constant(toric.nvars(), 1));
  AbelianOracle two{Quiver(QuiverSpec{2, {2, 2}, {{0, 1, 4}, {1, 2, 2}}})};
  EXPECT_EQ(two.omega(), (x(two, 1, 1) - x(two, 1, 2)) * (x(two, 2, 1) - x(two, 2, 2)));
}

TEST(Oracle, WeylSymmetry) {
  for (const auto &entry : corpus()) {
    Quiver q(entry.spec);
    AbelianOracle o(q);
    for (int i = 1; i <= q.rho(); ++i)
      for (int j = 1; j < q.rank(i); ++j) {
        std::vector<std::size_t> perm(o.nvars());
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[o.x_index(i, j)], perm[o.x_index(i, j + 1)]);
        for (const auto &b : basis_enumerate(q))
          ASSERT_EQ(o.lift(b).permuted(perm), o.lift(b)) << entry.name;
        ASSERT_EQ(o.omega().permuted(perm), -o.omega()) << entry.name;
      }
  }
}

TEST(Oracle, VerifyProductExamples) {
  Quiver q(flag(4, {2, 1}));
  AbelianOracle o(q);
  auto a = qcls(q, {}, {{1, p2}});
  auto good = qcls(q, {}, {{1, p22}}) + qcls(q, {1, 0}, {{1, p1}});
  EXPECT_TRUE(o.verify_product(a, a, good, Mode::quantum));
  EXPECT_FALSE(o.verify_product(a, a, qcls(q, {}, {{1, p22}}) + qcls(q, {1, 0}, {{1, p1}}, 2), Mode::quantum));
  EXPECT_FALSE(o.verify_product(a, a, qcls(q, {}, {{1, p22}}), Mode::quantum));

  Quiver g(grassmannian(4, 2));
  AbelianOracle og(g);
  EXPECT_TRUE(og.verify_product(cls(g, {{1, p1}}), cls(g, {{1, p1}}), cls(g, {{1, p2}}) + cls(g, {{1, p11}})));
  EXPECT_FALSE(og.verify_product(cls(g, {{1, p1}}), cls(g, {{1, p1}}), cls(g, {{1, p2}})));
}

TEST(Oracle, VerifyProductRejectsForeignClasses) {
  Quiver q(flag(4, {2, 1}));
  AbelianOracle o(q);
  QuantumClass bad(QTerm{{0}, SchurTuple{p1}});
  EXPECT_THROW(o.verify_product(bad, bad, bad, Mode::quantum), ValidationError);
}

TEST(Oracle, QuantumNeedsFano) {
  Quiver q(QuiverSpec{2, {1, 1}, {{0, 1, 2}, {1, 2, 3}}});
  AbelianOracle o(q);
  EXPECT_THROW(o.normal_form(Polynomial::constant(o.nvars(), 1), Mode::quantum), ValidationError);
  EXPECT_NO_THROW(o.normal_form(Polynomial::constant(o.nvars(), 1), Mode::classical));
}

TEST(Oracle, ToricIntegration) {
  Quiver q(QuiverSpec{2, {1, 1}, {{0, 1, 4}, {0, 2, 4}}});
  AbelianOracle o(q);
  EXPECT_EQ(o.toric_integrate(power(x(o, 1, 1), 3) * power(x(o, 2, 1), 3)), 1);
  EXPECT_EQ(o.toric_integrate(power(x(o, 1, 1), 2) * power(x(o, 2, 1), 3)), 0);
  EXPECT_EQ(o.toric_integrate(power(x(o, 1, 1), 4) * power(x(o, 2, 1), 2)), 0);
}

TEST(Oracle, MartinIntegration) {
  Quiver q(grassmannian(4, 2));
  AbelianOracle o(q);
  ClassicalRing ring(q);
  EXPECT_EQ(o.martin_integrate(cls(q, {{1, p22}})), 1);
  EXPECT_EQ(o.martin_integrate(cls(q, {{1, p1}})), 0);
  // s2 and s11 are each self-dual; their product vanishes.
  EXPECT_EQ(o.martin_integrate(ring.multiply(cls(q, {{1, p2}}), cls(q, {{1, p11}}))), 0);
  EXPECT_EQ(o.martin_integrate(ring.multiply(cls(q, {{1, p2}}), cls(q, {{1, p2}}))), 1);
  EXPECT_EQ(o.martin_integrate(ring.multiply(cls(q, {{1, p11}}), cls(q, {{1, p11}}))), 1);
  EXPECT_EQ(o.martin_integrate(ring.multiply(cls(q, {{1, p1}}), cls(q, {{1, p21}}))), 1);
  // The point class integrates to 1 on every corpus variety.
  for (const auto &entry : corpus()) {
    Quiver c(entry.spec);
    AbelianOracle oc(c);
    auto basis = basis_enumerate(c);
    EXPECT_EQ(oc.martin_integrate(CohClass(basis.back())), 1) << entry.name;
  }
}

TEST(Oracle, PairingMatrixGrassmannian) {
  Quiver q(grassmannian(4, 2));
  ClassicalRing ring(q);
  AbelianOracle o(q);
  auto m = pairing_matrix(ring, o);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(rank(m), 6u);
  // Basis order: [], [1], [2], [1,1], [2,1], [2,2]; duals pair to 1.
  EXPECT_EQ(m[0][5], 1);
  EXPECT_EQ(m[1][4], 1);
  EXPECT_EQ(m[2][2], 1);
  EXPECT_EQ(m[3][3], 1);
  EXPECT_EQ(m[2][3], 0);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_EQ(m[a][b], m[b][a]);
}

TEST(Oracle, PairingIsPerfect) {
  for (const auto &entry : corpus()) {
    if (entry.basis_size > 24)
      continue;
    Quiver q(entry.spec);
    ClassicalRing ring(q);
    AbelianOracle o(q);
    EXPECT_EQ(static_cast<long>(rank(pairing_matrix(ring, o))), entry.basis_size) << entry.name;
  }
}

TEST(Oracle, ConfluenceSample) {
  for (const auto &entry : corpus()) {
    Quiver q(entry.spec);
    AbelianOracle o(q);
    for (Mode m : {Mode::classical, Mode::quantum}) {
      auto t = confluence(o, m, 300, 5);
      EXPECT_TRUE(t.ok()) << entry.name << ": " << t.first_failure;
    }
  }
}

TEST(Oracle, AllPairsSmallQuivers) {
  for (const auto &spec : {grassmannian(4, 2), flag(4, {2, 1}), projective(4), toric_triangle()}) {
    Quiver q(spec);
    AbelianOracle o(q);
    for (Mode m : {Mode::classical, Mode::quantum}) {
      auto t = verify_all_pairs(q, m, o);
      EXPECT_TRUE(t.ok()) << t.first_failure;
    }
  }
  Quiver fl(flag(4, {2, 1}));
  EXPECT_EQ(verify_all_pairs(fl, Mode::quantum, AbelianOracle(fl)).total, 78);
}

TEST(Oracle, GrassmannianIdealAgreement) {
  for (auto [n, r] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{4, 1}}) {
    auto t = grassmannian_ideal(n, r, r * (n - r) + 2);
    EXPECT_TRUE(t.ok()) << t.first_failure;
  }
}

TEST(Oracle, RejectsTooManyVariables) {
  Quiver big(QuiverSpec{1, {8}, {{0, 1, 9}}});
  EXPECT_NO_THROW(AbelianOracle{big});
  Quiver bigger(QuiverSpec{2, {8, 8}, {{0, 1, 9}, {1, 2, 9}}});
  EXPECT_THROW(AbelianOracle{bigger}, ValidationError);
}
