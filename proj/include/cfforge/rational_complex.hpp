#ifndef CFFORGE_RATIONAL_COMPLEX_HPP
#define CFFORGE_RATIONAL_COMPLEX_HPP

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfforge {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-22/7", "0.5" or "1.25e-2" into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Gaussian rational re + i*im with exact arithmetic.
class RationalComplex {
 public:
  RationalComplex() = default;
  RationalComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  RationalComplex(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  static RationalComplex i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  RationalComplex conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  RationalComplex& operator+=(const RationalComplex& o);
  RationalComplex& operator-=(const RationalComplex& o);
  RationalComplex& operator*=(const RationalComplex& o);
  /// Throws std::domain_error when dividing by zero.
  RationalComplex& operator/=(const RationalComplex& o);

  friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
  friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
  friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
  friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "3", "-1/2", "2*i", "(1 + 3*i)".
std::string to_string(const RationalComplex& z);

}  // namespace cfforge

#endif  // CFFORGE_RATIONAL_COMPLEX_HPP
