#include "corpus.hpp"
#include "ring_helpers.hpp"
#include "qflag/expression.hpp"
#include "qflag/ring_quantum.hpp"

#include <gtest/gtest.h>

using namespace qflag;
using namespace qflag::fixtures;

TEST(Expression, ParsesTerms) {
  Quiver q(flag(4, {2, 1}));
  EXPECT_EQ(parse_class("1", q), qcls(q, {}, {}));
  EXPECT_TRUE(parse_class("0", q).is_zero());
  EXPECT_EQ(parse_class("s1[2,1]", q), qcls(q, {}, {{1, Partition{2, 1}}}));
  EXPECT_EQ(parse_class(" -2/3 q1^2 s1[1,1] s2[1] ", q),
            qcls(q, {2, 0}, {{1, Partition{1, 1}}, {2, Partition{1}}}, Rational(-2, 3)));
  EXPECT_EQ(parse_class("q1q2", q), qcls(q, {1, 1}, {}));
  EXPECT_EQ(parse_class("s1[1] - s1[1]", q), QuantumClass());
  EXPECT_EQ(parse_class("4/2", q), qcls(q, {}, {}, 2));
}

TEST(Expression, RepeatedVertexFactorsMultiply) {
  Quiver q(grassmannian(4, 2));
  EXPECT_EQ(parse_class("s1[1] s1[1]", q), qcls(q, {}, {{1, Partition{2}}}) + qcls(q, {}, {{1, Partition{1, 1}}}));
  // Too long for two Chern roots.
  EXPECT_TRUE(parse_class("s1[1,1,1]", q).is_zero());
}

TEST(Expression, Errors) {
  Quiver q(flag(4, {2, 1}));
  EXPECT_THROW(parse_class("", q), ParseError);
  EXPECT_THROW(parse_class("s1[2", q), ParseError);
  EXPECT_THROW(parse_class("s1[a]", q), ParseError);
  EXPECT_THROW(parse_class("s1 + ", q), ParseError);
  EXPECT_THROW(parse_class("x1", q), ParseError);
  EXPECT_THROW(parse_class("1/0", q), ParseError);
  EXPECT_THROW(parse_class("s3[1]", q), ValidationError);
  EXPECT_THROW(parse_class("q0", q), ValidationError);
  EXPECT_THROW(parse_class("s1[1,2]", q), ParseError);
  EXPECT_THROW(parse_classical("q1 s1[1]", q), ValidationError);
  try {
    parse_class("s1[1] * s2[1]", q);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("column 7"), std::string::npos) << e.what();
  }
}

TEST(Expression, PrintOrder) {
  Quiver q(flag(4, {2, 1}));
  auto c = parse_class("s1[1,1] + q2 + s1[2] + 3 s1[1] s2[1] - 1/2 q1^2", q);
  EXPECT_EQ(format_class(c), "3 s1[1] s2[1] + s1[2] + s1[1,1] + q2 - 1/2 q1^2");
  EXPECT_EQ(format_class(c, PrintOrder::deg), "q2 + 3 s1[1] s2[1] + s1[2] + s1[1,1] - 1/2 q1^2");
  EXPECT_EQ(format_class(QuantumClass()), "0");
  EXPECT_EQ(format_class(parse_class("-1", q)), "-1");
  EXPECT_EQ(format_class(parse_class("-s2[1]", q)), "-s2[1]");
}

TEST(Expression, RoundTripOverProducts) {
  for (const auto &entry : corpus()) {
    if (entry.basis_size > 30)
      continue;
    Quiver q(entry.spec);
    QuantumRing ring(q);
    auto basis = ring.basis();
    for (std::size_t a = 0; a < basis.size(); a += 3)
      for (std::size_t b = a; b < basis.size(); b += 2) {
        auto prod = ring.multiply(basis[a], basis[b]);
        for (auto order : {PrintOrder::lex, PrintOrder::deg}) {
          auto text = format_class(prod, order);
          ASSERT_EQ(parse_class(text, q), prod) << entry.name << ": " << text;
        }
      }
  }
}
