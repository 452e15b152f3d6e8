#include <gtest/gtest.h>

#include <random>

#include "pairblow/errors.hpp"
#include "pairblow/qlaurent.hpp"

using namespace pairblow;

namespace {

QLaurent q() { return QLaurent::q(); }
QLaurent c(long long v) { return QLaurent::constant(v); }
QLaurent qinv() { return QLaurent::monomial(1, -1); }
QLaurent half() { return QLaurent::constant(Rational(1, 2)); }

QLaurent random_laurent(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> exp(-3, 3), num(-5, 5), den(1, 4), terms(0, max_terms);
  QLaurent out;
  for (int i = terms(rng); i > 0; --i) out = out + QLaurent::monomial(Rational(num(rng), den(rng)), exp(rng));
  return out;
}

}  // namespace

TEST(QLaurent, AddExamples) {
  EXPECT_TRUE(((c(1) + q()) + (c(-1) - q())).is_zero());
  EXPECT_EQ(qinv() + q(), QLaurent({{-1, 1}, {1, 1}}));
  EXPECT_EQ(q() * (c(1) + q()) + q().pow(2), QLaurent({{1, 1}, {2, 2}}));
}

TEST(QLaurent, MulExamples) {
  EXPECT_EQ(q() * (c(1) + q()).pow(2), QLaurent({{1, 1}, {2, 2}, {3, 1}}));
  EXPECT_EQ(qinv() * q(), c(1));
  EXPECT_EQ(half() * (c(1) - q().pow(2)) * q(), QLaurent({{1, Rational(1, 2)}, {3, Rational(-1, 2)}}));
}

TEST(QLaurent, ScaleExamples) {
  EXPECT_EQ(scale(2, half() * q()), q());
  EXPECT_TRUE(scale(0, c(1) + q()).is_zero());
  EXPECT_EQ(scale(-1, q() - q().pow(3)), q().pow(3) - q());
}

TEST(QLaurent, DivideExamples) {
  EXPECT_EQ(divide_exact(q() * (c(1) + q()).pow(2), q()), (c(1) + q()).pow(2));
  EXPECT_EQ(divide_exact(half() * q() * (c(1) - q().pow(2)), q()), half() * (c(1) - q().pow(2)));
  EXPECT_EQ(divide_exact(c(1) + q(), c(1) + q()), c(1));
}

TEST(QLaurent, DivideErrors) {
  EXPECT_THROW(divide_exact(c(1) + q(), QLaurent()), DivisionByZero);
  EXPECT_THROW(divide_exact(c(1), c(1) + q()), NonExactDivision);
  EXPECT_THROW(divide_exact(q().pow(2) + c(1), q() + c(1)), NonExactDivision);
}

TEST(QLaurent, ZeroCoefficientsArePruned) {
  const QLaurent a = q() + c(1);
  const QLaurent z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  const QLaurent b = a * (q() - c(1)) + c(1);
  for (const auto& [e, v] : b.terms()) EXPECT_NE(v, 0) << e;
}

TEST(QLaurent, TextRoundTrip) {
  const QLaurent a = half() * q() * (c(1) - q().pow(2));
  EXPECT_EQ(to_string(a), "1/2*q^1 + -1/2*q^3");
  EXPECT_EQ(parse_qlaurent(to_string(a)), a);
  EXPECT_EQ(to_string(QLaurent()), "0");
  EXPECT_EQ(parse_qlaurent("0"), QLaurent());
  EXPECT_EQ(parse_qlaurent("3*q^-2 + 1*q^-2"), QLaurent::monomial(4, -2));
  EXPECT_THROW(parse_qlaurent("q^2"), ParseError);
  EXPECT_THROW(parse_qlaurent("1/0*q^1"), ParseError);
  EXPECT_THROW(parse_qlaurent("1*q^"), ParseError);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QLaurent r = random_laurent(rng);
    EXPECT_EQ(parse_qlaurent(to_string(r)), r) << to_string(r);
  }
}

TEST(QLaurent, RingAxiomsRandom) {
  std::mt19937 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const QLaurent a = random_laurent(rng), b = random_laurent(rng), d = random_laurent(rng);
    ASSERT_EQ((a + b) + d, a + (b + d));
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + d), a * b + a * d);
  }
}

TEST(QLaurent, DivideInvertsMultiply) {
  std::mt19937 rng(99);
  int checked = 0;
  while (checked < 200) {
    const QLaurent a = random_laurent(rng), b = random_laurent(rng);
    if (b.is_zero()) continue;
    ASSERT_EQ(divide_exact(a * b, b), a);
    ++checked;
  }
}
