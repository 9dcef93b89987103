#include "hanoi/quad.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hanoi/model.hpp"

namespace hanoi {
namespace {

// Random element of Q(sqrt(d)) with small numerators and denominators.
QuadValue random_quad(std::mt19937_64& rng, long d) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d};
}

TEST(QuadValueTest, RejectsBadRadicands) {
  EXPECT_THROW(QuadValue(1, 1, 4), InvalidInput);
  EXPECT_THROW(QuadValue(1, 1, 1), InvalidInput);
  EXPECT_THROW(QuadValue(1, 1, 0), InvalidInput);
  EXPECT_THROW(QuadValue(1, 1, 12), InvalidInput);
  EXPECT_NO_THROW(QuadValue(1, 1, 17));
}

TEST(QuadValueTest, MixedRadicandsThrow) {
  EXPECT_THROW(QuadValue::root(2) + QuadValue::root(3), InvalidInput);
  EXPECT_THROW(QuadValue::root(2) * QuadValue::root(3), InvalidInput);
}

TEST(QuadValueTest, Basics) {
  const QuadValue r = QuadValue::root(3);
  EXPECT_EQ(r * r, QuadValue::integer(3, 3));
  EXPECT_TRUE((r * r).is_integer());
  EXPECT_EQ((r * r).to_integer(), 3);
  EXPECT_FALSE(r.is_integer());
  EXPECT_THROW(r.to_integer(), InvalidInput);
  EXPECT_THROW(QuadValue(Rational(1, 2), 0, 2).to_integer(), InvalidInput);
  EXPECT_EQ(QuadValue(Rational(3), Rational(2), 2).norm(), Rational(1));
  EXPECT_NEAR(QuadValue(1, 1, 2).to_double(), 2.41421356237, 1e-10);
  EXPECT_EQ(QuadValue(1, 1, 2).pow(0), QuadValue::integer(1, 2));
  EXPECT_THROW(QuadValue(1, 1, 2) / QuadValue(0, 0, 2), InvalidInput);
}

TEST(QuadValueTest, PowMatchesRepeatedProduct) {
  const QuadValue x(Rational(1, 2), Rational(-3, 5), 17);
  QuadValue acc = QuadValue::integer(1, 17);
  for (unsigned e = 0; e <= 20; ++e) {
    EXPECT_EQ(x.pow(e), acc);
    acc *= x;
  }
}

TEST(QuadValuePropertyTest, FieldAxioms) {
  std::mt19937_64 rng(2024);
  const std::array<long, 4> radicands{2, 3, 5, 17};
  for (int i = 0; i < 1000; ++i) {
    const long d = radicands[i % radicands.size()];
    const QuadValue x = random_quad(rng, d);
    const QuadValue y = random_quad(rng, d);
    const QuadValue z = random_quad(rng, d);
    const QuadValue zero(0, 0, d);
    const QuadValue one(1, 0, d);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + zero, x);
    EXPECT_EQ(x * one, x);
    EXPECT_EQ(x - x, zero);
    EXPECT_EQ(x + (-x), zero);
    if (!(x == zero)) {
      EXPECT_EQ(x * (one / x), one);
      EXPECT_EQ((y / x) * x, y);
    }
    // Conjugation is a ring automorphism and the norm is multiplicative.
    EXPECT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ(x * x.conjugate(), QuadValue(x.norm(), 0, d));
  }
}

}  // namespace
}  // namespace hanoi
