#include "cfforge/poly_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfforge {

namespace {

struct SignedText {
  bool negative = false;
  std::string magnitude;  // empty means unit magnitude
};

SignedText split_sign(const RationalComplex& c) {
  if (c.is_real()) {
    const Rational m = c.re() < 0 ? Rational(-c.re()) : c.re();
    return {c.re() < 0, m == 1 ? std::string() : to_string(m)};
  }
  if (c.re() == 0) {
    const Rational m = c.im() < 0 ? Rational(-c.im()) : c.im();
    return {c.im() < 0, m == 1 ? std::string("i") : to_string(m) + "*i"};
  }
  return {false, to_string(c)};
}

std::string power_text(std::string_view variable, int power) {
  if (power == 0) return {};
  std::string out(variable);
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::size_t nonzero_count(const Poly& p) {
  return static_cast<std::size_t>(std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                 [](const auto& c) { return !c.is_zero(); }));
}

}  // namespace

Poly::Poly(std::vector<RationalComplex> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Poly::Poly(RationalComplex constant) : coefficients_{std::move(constant)} { trim(); }

Poly Poly::monomial(RationalComplex c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<RationalComplex> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = std::move(c);
  return Poly(std::move(coeffs));
}

RationalComplex Poly::coefficient(int power) const {
  if (power < 0 || power > degree()) return {};
  return coefficients_[static_cast<std::size_t>(power)];
}

Poly Poly::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<RationalComplex> out(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    out[k - 1] = coefficients_[k] * RationalComplex(static_cast<long long>(k));
  }
  return Poly(std::move(out));
}

std::complex<double> Poly::evaluate(std::complex<double> v) const {
  std::complex<double> acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * v + it->to_complex();
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<RationalComplex> out(coefficients_.size() + o.coefficients_.size() - 1);
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    if (coefficients_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coefficients_.size(); ++b) {
      out[a + b] += coefficients_[a] * o.coefficients_[b];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const RationalComplex& c) {
  for (auto& coeff : coefficients_) coeff *= c;
  trim();
  return *this;
}

void Poly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

std::string to_string(const Poly& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const auto c = p.coefficient(k);
    if (c.is_zero()) continue;
    const auto s = split_sign(c);
    std::string body = join_factors({s.magnitude, power_text(variable, k)});
    if (body.empty()) body = "1";
    append_signed(out, s.negative, body);
  }
  return nonzero_count(p) > 1 ? "(" + out + ")" : out;
}

std::string_view variable_name(VariableTag tag) {
  return tag == VariableTag::XSpace ? "x" : "t";
}

PolyDiffOperator::PolyDiffOperator(VariableTag tag, std::vector<Poly> terms)
    : tag_(tag), terms_(std::move(terms)) {
  trim();
}

const Poly& PolyDiffOperator::term(int order) const {
  static const Poly kZero;
  if (order < 0 || order > this->order()) return kZero;
  return terms_[static_cast<std::size_t>(order)];
}

int PolyDiffOperator::degree() const {
  int d = -1;
  for (const auto& p : terms_) d = std::max(d, p.degree());
  return d;
}

PolyDiffOperator& PolyDiffOperator::add_term(int order, const Poly& p) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (static_cast<std::size_t>(order) >= terms_.size()) {
    terms_.resize(static_cast<std::size_t>(order) + 1);
  }
  terms_[static_cast<std::size_t>(order)] += p;
  trim();
  return *this;
}

std::complex<double> PolyDiffOperator::apply(
    double v, std::span<const std::complex<double>> derivatives) const {
  if (static_cast<int>(derivatives.size()) <= order()) {
    throw std::invalid_argument("apply: need derivatives up to the operator order");
  }
  std::complex<double> acc = 0.0;
  for (std::size_t m = 0; m < terms_.size(); ++m) {
    acc += terms_[m].evaluate(v) * derivatives[m];
  }
  return acc;
}

PolyDiffOperator& PolyDiffOperator::operator+=(const PolyDiffOperator& o) {
  if (o.tag_ != tag_ && !o.is_zero() && !is_zero()) {
    throw std::invalid_argument("adding operators in different variables");
  }
  if (is_zero()) tag_ = o.tag_;
  for (int m = 0; m <= o.order(); ++m) add_term(m, o.term(m));
  return *this;
}

PolyDiffOperator& PolyDiffOperator::operator*=(const RationalComplex& c) {
  for (auto& p : terms_) p *= c;
  trim();
  return *this;
}

void PolyDiffOperator::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

std::string to_string(const PolyDiffOperator& op) {
  if (op.is_zero()) return "0";
  const auto var = variable_name(op.tag());
  std::string out;
  for (int m = op.order(); m >= 0; --m) {
    const Poly& p = op.term(m);
    if (p.is_zero()) continue;
    const std::string d = "D" + std::to_string(m);
    if (nonzero_count(p) == 1) {
      const int k = p.degree();
      const auto s = split_sign(p.leading());
      append_signed(out, s.negative, join_factors({s.magnitude, power_text(var, k), d}));
    } else {
      append_signed(out, false, to_string(p, var) + "*" + d);
    }
  }
  return out;
}

}  // namespace cfforge
