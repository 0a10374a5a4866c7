#include "cfforge/ode_transform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cfforge/special_fn.hpp"

namespace cfforge {

namespace {

const RationalComplex kMinusI{Rational(0), Rational(-1)};

RationalComplex minus_i_power(int m) {
  RationalComplex r(1);
  for (int j = 0; j < m; ++j) r *= kMinusI;
  return r;
}

// (-i d/dt) applied on the left of an operator: d/dt (q D^j) = q' D^j + q D^{j+1}.
PolyDiffOperator minus_i_d_dt(const PolyDiffOperator& op) {
  PolyDiffOperator out(VariableTag::TFrequency);
  for (int j = 0; j <= op.order(); ++j) {
    const Poly& q = op.term(j);
    if (q.is_zero()) continue;
    out.add_term(j, q.derivative() * kMinusI);
    out.add_term(j + 1, q * kMinusI);
  }
  return out;
}

// (-i d/dt)^k composed with multiplication by (-it)^m.
PolyDiffOperator transform_monomial(int k, int m) {
  PolyDiffOperator op(VariableTag::TFrequency);
  op.add_term(0, Poly::monomial(minus_i_power(m), m));
  for (int step = 0; step < k; ++step) op = minus_i_d_dt(op);
  return op;
}

}  // namespace

PolyDiffOperator fourier_transform_operator(const PolyDiffOperator& op,
                                            int max_density_decay_order,
                                            const TransformLimits& limits) {
  if (op.tag() != VariableTag::XSpace) {
    throw std::invalid_argument("fourier_transform_operator: input must be an x-space operator");
  }
  if (op.degree() > limits.max_degree || op.order() > limits.max_order) {
    throw std::invalid_argument("fourier_transform_operator: operator exceeds size limits (degree " +
                                std::to_string(op.degree()) + ", order " +
                                std::to_string(op.order()) + ")");
  }
  if (op.degree() > max_density_decay_order) {
    throw std::invalid_argument(
        "fourier_transform_operator: degree " + std::to_string(op.degree()) +
        " exceeds the certified decay order " + std::to_string(max_density_decay_order));
  }

  PolyDiffOperator out(VariableTag::TFrequency);
  for (int m = 0; m <= op.order(); ++m) {
    const Poly& p = op.term(m);
    for (int k = 0; k <= p.degree(); ++k) {
      const auto c = p.coefficient(k);
      if (c.is_zero()) continue;
      out += c * transform_monomial(k, m);
    }
  }
  return out;
}

PolyDiffOperator canonicalize(const PolyDiffOperator& op) {
  if (op.is_zero()) throw std::invalid_argument("canonicalize: zero operator");
  const RationalComplex scale = RationalComplex(1) / op.term(op.order()).leading();
  return scale * op;
}

PolyDiffOperator student_t_density_operator(const Rational& nu) {
  if (nu <= 0) throw std::invalid_argument("student_t_density_operator: nu must be positive");
  PolyDiffOperator op(VariableTag::XSpace);
  op.add_term(1, Poly(std::vector<RationalComplex>{nu, Rational(0), Rational(1)}));
  op.add_term(0, Poly::monomial(Rational(nu + 1), 1));
  return op;
}

PolyDiffOperator f_density_operator(const Rational& d1, const Rational& d2) {
  if (d1 <= 0 || d2 <= 0) {
    throw std::invalid_argument("f_density_operator: d1 and d2 must be positive");
  }
  const Poly x = Poly::variable();
  const Poly d2_plus_d1x = Poly(RationalComplex(d2)) + x * RationalComplex(d1);
  const Rational half = Rational(1, 2);
  const Rational a = d1 * half - 1;
  PolyDiffOperator op(VariableTag::XSpace);
  op.add_term(1, x * d2_plus_d1x);
  op.add_term(0, x * RationalComplex(Rational(d1 * (d1 + d2) * half)) -
                     d2_plus_d1x * RationalComplex(a));
  return op;
}

double f_density_kernel(double d1, double d2, double x) {
  return std::pow(x, 0.5 * d1 - 1.0) * std::pow(1.0 + d1 * x / d2, -0.5 * (d1 + d2));
}

double substitution_lemma_check(double nu, std::span<const double> x_grid, BesselKind kind) {
  if (!(nu > 0.0)) throw std::invalid_argument("substitution_lemma_check: nu must be positive");
  const double mu = 0.5 * nu;
  const double root = std::sqrt(nu);
  auto g = [&](double x) {
    const auto z = kind == BesselKind::K ? bessel_k(mu, root * x) : bessel_i(mu, root * x);
    return std::pow(x, mu) * z.value;
  };
  double worst = 0.0;
  for (double x : x_grid) {
    if (!(x > 0.0)) throw std::invalid_argument("substitution_lemma_check: grid must be positive");
    const double h = 1e-4 * x;
    const double g0 = g(x);
    const double gp = g(x + h);
    const double gm = g(x - h);
    const double d1 = (gp - gm) / (2.0 * h);
    const double d2 = (gp - 2.0 * g0 + gm) / (h * h);
    const double a = x * d2;
    const double b = (nu - 1.0) * d1;
    const double c = nu * x * g0;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    worst = std::max(worst, std::abs(a - b - c) / scale);
  }
  return worst;
}

nlohmann::json to_json(const PolyDiffOperator& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (int m = 0; m <= op.order(); ++m) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : op.term(m).coefficients()) {
      coeffs.push_back({{"re", to_string(c.re())}, {"im", to_string(c.im())}});
    }
    terms.push_back({{"order", m}, {"coefficients", coeffs}});
  }
  return {{"variable", std::string(variable_name(op.tag()))},
          {"order", op.order()},
          {"terms", terms}};
}

}  // namespace cfforge
