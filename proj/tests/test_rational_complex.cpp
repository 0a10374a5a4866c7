#include "cfforge/rational_complex.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace cfforge {
namespace {

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-22/7"), Rational(-22, 7));
  EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("1.25e-2"), Rational(1, 80));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational(".25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("2E3"), Rational(2000));
  EXPECT_EQ(parse_rational("0.500000"), Rational(1, 2));
  EXPECT_EQ(parse_rational("010/08"), Rational(5, 4));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("-000.000"), Rational(0));
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "-", "abc", "1/0", "1/", "/2", "1..2", "1e", "3x", "0x10", "."}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalComplex, FieldOperations) {
  const RationalComplex a(Rational(1, 2), Rational(3));
  const RationalComplex b(Rational(-2), Rational(1, 3));
  EXPECT_EQ(a + b, RationalComplex(Rational(-3, 2), Rational(10, 3)));
  EXPECT_EQ(a - b, RationalComplex(Rational(5, 2), Rational(8, 3)));
  EXPECT_EQ(a * b, RationalComplex(Rational(-2), Rational(-35, 6)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(RationalComplex::i() * RationalComplex::i(), RationalComplex(-1));
  EXPECT_EQ(a.conj(), RationalComplex(Rational(1, 2), Rational(-3)));
  EXPECT_EQ(a.norm(), Rational(37, 4));
  EXPECT_THROW(a / RationalComplex(0), std::domain_error);
}

TEST(RationalComplex, ToComplex) {
  const auto z = RationalComplex(Rational(1, 4), Rational(-3, 2)).to_complex();
  EXPECT_EQ(z.real(), 0.25);
  EXPECT_EQ(z.imag(), -1.5);
}

TEST(RationalComplex, Printing) {
  EXPECT_EQ(to_string(RationalComplex(3)), "3");
  EXPECT_EQ(to_string(RationalComplex(Rational(-1, 2))), "-1/2");
  EXPECT_EQ(to_string(RationalComplex(Rational(0), Rational(2))), "2*i");
  EXPECT_EQ(to_string(-RationalComplex::i()), "-i");
  EXPECT_EQ(to_string(RationalComplex(Rational(1), Rational(3))), "(1 + 3*i)");
  EXPECT_EQ(to_string(RationalComplex(Rational(1), Rational(-1))), "(1 - i)");
}

}  // namespace
}  // namespace cfforge
