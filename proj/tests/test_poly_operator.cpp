#include "cfforge/poly_operator.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <vector>

namespace cfforge {
namespace {

const RationalComplex kI = RationalComplex::i();

Poly x() { return Poly::variable(); }

TEST(Poly, TrimsAndReportsDegree) {
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_TRUE(Poly(RationalComplex(0)).is_zero());
  const Poly p({RationalComplex(1), RationalComplex(0), RationalComplex(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ((x() - x()).degree(), -1);
  EXPECT_EQ(p.coefficient(7), RationalComplex(0));
}

TEST(Poly, Arithmetic) {
  const Poly a = x() * x() + Poly(RationalComplex(3));
  const Poly b = x() - Poly(RationalComplex(1));
  const Poly product = a * b;  // x^3 - x^2 + 3x - 3
  EXPECT_EQ(product, Poly({RationalComplex(-3), RationalComplex(3), RationalComplex(-1),
                           RationalComplex(1)}));
  EXPECT_EQ(product.derivative(),
            Poly({RationalComplex(3), RationalComplex(-2), RationalComplex(3)}));
  EXPECT_EQ(a * kI, Poly({RationalComplex(Rational(0), Rational(3)), RationalComplex(0), kI}));
}

TEST(Poly, Evaluate) {
  const Poly p = x() * x() * kI + Poly(RationalComplex(2));
  const auto v = p.evaluate({0.5, 0.0});
  EXPECT_DOUBLE_EQ(v.real(), 2.0);
  EXPECT_DOUBLE_EQ(v.imag(), 0.25);
}

TEST(Poly, Printing) {
  EXPECT_EQ(to_string(Poly(), "x"), "0");
  EXPECT_EQ(to_string(Poly(RationalComplex(-2)), "x"), "-2");
  EXPECT_EQ(to_string(x() * RationalComplex(4), "x"), "4*x");
  EXPECT_EQ(to_string(x() * x() + Poly(RationalComplex(3)), "x"), "(3 + x^2)");
}

TEST(PolyDiffOperator, OrderDegreeAndApply) {
  // (3 + x^2) D + 4 x
  PolyDiffOperator op(VariableTag::XSpace);
  op.add_term(1, x() * x() + Poly(RationalComplex(3)));
  op.add_term(0, x() * RationalComplex(4));
  EXPECT_EQ(op.order(), 1);
  EXPECT_EQ(op.degree(), 2);
  const std::vector<std::complex<double>> d = {2.0, -1.0};
  EXPECT_EQ(op.apply(1.0, d), std::complex<double>(4.0, 0.0));
  EXPECT_EQ(PolyDiffOperator().order(), -1);
}

TEST(PolyDiffOperator, AddingCancelsAndTrims) {
  PolyDiffOperator a(VariableTag::TFrequency);
  a.add_term(2, x());
  a.add_term(0, Poly(RationalComplex(1)));
  PolyDiffOperator b(VariableTag::TFrequency);
  b.add_term(2, -x());
  const auto sum = a + b;
  EXPECT_EQ(sum.order(), 0);
  EXPECT_EQ(RationalComplex(0) * a, PolyDiffOperator(VariableTag::TFrequency));
}

TEST(PolyDiffOperator, Printing) {
  PolyDiffOperator op(VariableTag::TFrequency);
  op.add_term(2, x());
  op.add_term(1, Poly(RationalComplex(-2)));
  op.add_term(0, x() * RationalComplex(-3));
  EXPECT_EQ(to_string(op), "t*D2 - 2*D1 - 3*t*D0");
  EXPECT_EQ(to_string(PolyDiffOperator()), "0");
  EXPECT_EQ(variable_name(VariableTag::XSpace), "x");
  EXPECT_EQ(variable_name(VariableTag::TFrequency), "t");
}

}  // namespace
}  // namespace cfforge
