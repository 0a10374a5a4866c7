#include "cfforge/rational_complex.hpp"

#include <cctype>
#include <stdexcept>

namespace cfforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix.
boost::multiprecision::cpp_int decimal_int(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return boost::multiprecision::cpp_int(std::string(digits.substr(first)));
}

boost::multiprecision::cpp_int pow10(long long n) {
  boost::multiprecision::cpp_int r = 1;
  for (long long k = 0; k < n; ++k) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  using boost::multiprecision::cpp_int;
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const cpp_int d = decimal_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(decimal_int(num), d);
  } else {
    std::string_view mantissa = s;
    long long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 4) return fail();
      exponent = std::stoll(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long long fraction_digits = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto whole = mantissa.substr(0, dot);
      const auto frac = mantissa.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty())) {
        return fail();
      }
      digits = std::string(whole) + std::string(frac);
      fraction_digits = static_cast<long long>(frac.size());
    } else {
      if (!all_digits(mantissa)) return fail();
      digits = std::string(mantissa);
    }
    const long long scale = exponent - fraction_digits;
    const cpp_int n = decimal_int(digits);
    value = scale >= 0 ? Rational(n * pow10(scale)) : Rational(n, pow10(-scale));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

RationalComplex& RationalComplex::operator+=(const RationalComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

RationalComplex& RationalComplex::operator-=(const RationalComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

RationalComplex& RationalComplex::operator*=(const RationalComplex& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

RationalComplex& RationalComplex::operator/=(const RationalComplex& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const RationalComplex& z) {
  if (z.is_real()) return to_string(z.re());
  const auto imag = [](const Rational& q) {
    if (q == 1) return std::string("i");
    if (q == -1) return std::string("-i");
    return to_string(q) + "*i";
  };
  if (z.re() == 0) return imag(z.im());
  std::string out = "(" + to_string(z.re());
  if (z.im() < 0) {
    out += " - " + imag(-z.im());
  } else {
    out += " + " + imag(z.im());
  }
  return out + ")";
}

}  // namespace cfforge
