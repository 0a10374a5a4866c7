#ifndef CFFORGE_POLY_OPERATOR_HPP
#define CFFORGE_POLY_OPERATOR_HPP

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfforge/rational_complex.hpp"

namespace cfforge {

/// Univariate polynomial with Gaussian-rational coefficients; index = power.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<RationalComplex> coefficients);
  Poly(RationalComplex constant);  // NOLINT(google-explicit-constructor)

  /// c * v^power.
  static Poly monomial(RationalComplex c, int power);
  /// The variable itself.
  static Poly variable() { return monomial(RationalComplex(1), 1); }

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  /// Zero past the degree.
  RationalComplex coefficient(int power) const;
  const std::vector<RationalComplex>& coefficients() const { return coefficients_; }
  const RationalComplex& leading() const { return coefficients_.back(); }

  Poly derivative() const;
  std::complex<double> evaluate(std::complex<double> v) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const RationalComplex& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const RationalComplex& c) { return a *= c; }
  friend Poly operator*(const RationalComplex& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= RationalComplex(-1); }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<RationalComplex> coefficients_;
};

/// Ascending powers: "(3 + x^2)", "4*x", "-2", "(1 + i)*t".
std::string to_string(const Poly& p, std::string_view variable);

enum class VariableTag { XSpace, TFrequency };

std::string_view variable_name(VariableTag tag);

/// Linear differential operator  sum_m p_m(v) D^m  with polynomial
/// coefficients; terms()[m] multiplies the m-th derivative.
class PolyDiffOperator {
 public:
  explicit PolyDiffOperator(VariableTag tag = VariableTag::XSpace) : tag_(tag) {}
  PolyDiffOperator(VariableTag tag, std::vector<Poly> terms);

  VariableTag tag() const { return tag_; }
  const std::vector<Poly>& terms() const { return terms_; }
  /// Zero past the order.
  const Poly& term(int order) const;

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero operator.
  int order() const { return static_cast<int>(terms_.size()) - 1; }
  /// Highest polynomial degree over all terms; -1 for the zero operator.
  int degree() const;

  /// Adds p * D^order.
  PolyDiffOperator& add_term(int order, const Poly& p);

  /// L[f](v) given f(v), f'(v), ..., f^(order)(v).
  std::complex<double> apply(double v, std::span<const std::complex<double>> derivatives) const;

  PolyDiffOperator& operator+=(const PolyDiffOperator& o);
  PolyDiffOperator& operator*=(const RationalComplex& c);

  friend PolyDiffOperator operator+(PolyDiffOperator a, const PolyDiffOperator& b) {
    return a += b;
  }
  friend PolyDiffOperator operator*(const RationalComplex& c, PolyDiffOperator a) {
    return a *= c;
  }
  friend bool operator==(const PolyDiffOperator& a, const PolyDiffOperator& b) = default;

 private:
  void trim();

  VariableTag tag_;
  std::vector<Poly> terms_;
};

/// Highest order first, e.g. "t*D2 - 2*D1 - 3*t*D0"; "0" for the zero operator.
std::string to_string(const PolyDiffOperator& op);

}  // namespace cfforge

#endif  // CFFORGE_POLY_OPERATOR_HPP
