#include "cfforge/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfforge {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Gamma(z + 1) for z >= -0.5.
double lanczos_gamma_shifted(double z) {
  double series = kLanczosCoefficients[0];
  for (std::size_t k = 1; k < kLanczosCoefficients.size(); ++k) {
    series += kLanczosCoefficients[k] / (z + static_cast<double>(k));
  }
  const double t = z + kLanczosG + 0.5;
  // t^(z+1/2) overflows near z = 170 even though the product does not.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
  return sqrt_two_pi * (half_power * std::exp(-t)) * half_power * series;
}

void require_positive_argument(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": argument must be positive and finite, got " +
                            std::to_string(x));
  }
}

void require_finite_order(double mu, const char* what) {
  if (!std::isfinite(mu)) {
    throw std::domain_error(std::string(what) + ": order must be finite");
  }
}

// log cosh(a) for a >= 0 without overflow.
double log_cosh(double a) {
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// The log-integrand has curvature x cosh(s*) = hypot(x, mu) at its peak;
// keep a few nodes across that width.
double trapezoid_step(double mu, double x) {
  return std::min(0.1, 0.5 / std::sqrt(std::hypot(x, mu)));
}

// Trapezoidal sum of e^{x} exp(-x cosh s) cosh(mu s) over s >= 0, returned as
// log of the integral. The log-integrand is normalised by its maximum so
// large orders at tiny arguments do not overflow the summation.
double log_k_scaled(double mu, double x) {
  const double h = trapezoid_step(mu, x);
  const double peak = std::asinh(mu / x);
  constexpr double kCutoff = 41.5;  // e^-41.5 < 1e-18
  constexpr std::size_t kMaxNodes = 1'000'000;

  auto log_integrand = [&](double s) {
    const double sh = std::sinh(0.5 * s);
    return -2.0 * x * sh * sh + log_cosh(mu * s);
  };

  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(peak / h) + 64);
  double running_max = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kMaxNodes; ++k) {
    const double s = static_cast<double>(k) * h;
    const double l = log_integrand(s);
    logs.push_back(l);
    running_max = std::max(running_max, l);
    if (s > peak && l < running_max - kCutoff) break;
  }

  double sum = 0.5 * std::exp(logs.front() - running_max);
  for (std::size_t k = 1; k < logs.size(); ++k) sum += std::exp(logs[k] - running_max);
  return running_max + std::log(h * sum);
}

// Mantissa-preserving evaluation of the same sum when it is representable.
double k_scaled_direct(double mu, double x) {
  const double h = trapezoid_step(mu, x);
  const double peak = std::asinh(mu / x);
  constexpr double kCutoff = 1e-18;

  double sum = 0.0;
  double running_max = 0.0;
  for (std::size_t k = 0;; ++k) {
    const double s = static_cast<double>(k) * h;
    const double sh = std::sinh(0.5 * s);
    const double term = std::exp(-2.0 * x * sh * sh) * std::cosh(mu * s);
    sum += (k == 0) ? 0.5 * term : term;
    running_max = std::max(running_max, term);
    if (s > peak && term < kCutoff * running_max) break;
  }
  return h * sum;
}

double i_series(double mu, double x) {
  const double half = 0.5 * x;
  const auto g = gamma(mu + 1.0);
  double term = g.ok() ? std::pow(half, mu) / g.value
                       : std::exp(mu * std::log(half) - std::lgamma(mu + 1.0));
  const double q = half * half;
  double sum = term;
  for (int k = 1; k <= 500; ++k) {
    term *= q / (static_cast<double>(k) * (mu + static_cast<double>(k)));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// e^-x sqrt(2 pi x) I_mu(x) from the large-argument expansion.
double i_asymptotic_factor(double mu, double x) {
  const double four_mu2 = 4.0 * mu * mu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (four_mu2 - odd * odd) / (8.0 * k * x);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

std::string_view to_string(EvalStatus status) {
  switch (status) {
    case EvalStatus::Ok:
      return "ok";
    case EvalStatus::Underflow:
      return "underflow";
    case EvalStatus::Overflow:
      return "overflow";
  }
  return "unknown";
}

EvalResult gamma(double u) {
  require_positive_argument(u, "gamma");
  if (u > kGammaArgumentMax) {
    return {std::numeric_limits<double>::infinity(), EvalStatus::Overflow};
  }
  if (u < 0.5) {
    return {lanczos_gamma_shifted(u) / u, EvalStatus::Ok};
  }
  if (u < 10.0) {
    return {lanczos_gamma_shifted(u - 1.0), EvalStatus::Ok};
  }
  // Lanczos loses ~u ulps through t^(u+1/2) e^-t; step down to [1, 2)
  // instead. Each u - m is exact because it lies on u's own ulp grid.
  const double steps = std::floor(u) - 1.0;
  double value = lanczos_gamma_shifted(u - steps - 1.0);
  for (double m = 1.0; m <= steps; m += 1.0) value *= u - m;
  return {value, EvalStatus::Ok};
}

EvalResult bessel_i(double mu, double x) {
  require_finite_order(mu, "bessel_i");
  require_positive_argument(x, "bessel_i");
  if (mu < 0.0) {
    throw std::domain_error("bessel_i: negative orders are not supported");
  }
  if (x > kArgumentMax) {
    return {std::numeric_limits<double>::infinity(), EvalStatus::Overflow};
  }
  double value = 0.0;
  if (x > 30.0 && x > mu * mu) {
    value = std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x) * i_asymptotic_factor(mu, x);
  } else {
    value = i_series(mu, x);
  }
  if (!std::isfinite(value)) return {std::numeric_limits<double>::infinity(), EvalStatus::Overflow};
  return {value, EvalStatus::Ok};
}

EvalResult bessel_k_scaled(double mu, double x) {
  require_finite_order(mu, "bessel_k");
  require_positive_argument(x, "bessel_k");
  mu = std::abs(mu);
  // Peak of the integrand lies at s ~ asinh(mu/x); exp() of it overflows
  // once mu * s passes ~700.
  if (mu * std::asinh(mu / x) < 600.0) {
    const double value = k_scaled_direct(mu, x);
    if (std::isfinite(value)) return {value, EvalStatus::Ok};
  }
  const double log_value = log_k_scaled(mu, x);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    return {std::numeric_limits<double>::infinity(), EvalStatus::Overflow};
  }
  return {std::exp(log_value), EvalStatus::Ok};
}

double bessel_k_log(double mu, double x) {
  require_finite_order(mu, "bessel_k");
  require_positive_argument(x, "bessel_k");
  mu = std::abs(mu);
  if (mu * std::asinh(mu / x) < 600.0) return std::log(k_scaled_direct(mu, x)) - x;
  return log_k_scaled(mu, x) - x;
}

EvalResult bessel_k(double mu, double x) {
  require_finite_order(mu, "bessel_k");
  require_positive_argument(x, "bessel_k");
  if (x > kArgumentMax) return {0.0, EvalStatus::Underflow};
  const auto scaled = bessel_k_scaled(mu, x);
  if (!scaled.ok()) return scaled;
  const double value = scaled.value * std::exp(-x);
  if (value < std::numeric_limits<double>::min()) return {0.0, EvalStatus::Underflow};
  return {value, EvalStatus::Ok};
}

EvalResult bessel_k_weighted_derivative(double mu, double x) {
  const auto k = bessel_k(mu - 1.0, x);
  if (!k.ok()) return k;
  const double value = -std::pow(x, mu) * k.value;
  if (!std::isfinite(value)) return {-std::numeric_limits<double>::infinity(), EvalStatus::Overflow};
  if (value != 0.0 && std::abs(value) < std::numeric_limits<double>::min()) {
    return {0.0, EvalStatus::Underflow};
  }
  return {value, EvalStatus::Ok};
}

double limiting_form_ratio(double mu, LimitingForm kind, double x) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::domain_error("limiting_form_ratio: order must be positive");
  }
  require_positive_argument(x, "limiting_form_ratio");
  switch (kind) {
    case LimitingForm::IlargeX: {
      if (x < 30.0) throw std::domain_error("limiting_form_ratio: I_large_x needs x >= 30");
      const auto i = bessel_i(mu, x);
      if (!i.ok()) throw std::domain_error("limiting_form_ratio: I overflowed");
      return i.value * std::sqrt(2.0 * std::numbers::pi * x) * std::exp(-x);
    }
    case LimitingForm::KsmallX: {
      if (x > 1e-3) throw std::domain_error("limiting_form_ratio: K_small_x needs x <= 1e-3");
      const auto k = bessel_k(mu, x);
      const auto g = gamma(mu);
      if (!k.ok() || !g.ok()) throw std::domain_error("limiting_form_ratio: K or Gamma overflowed");
      return k.value * std::pow(x, mu) / (std::pow(2.0, mu - 1.0) * g.value);
    }
  }
  throw std::domain_error("limiting_form_ratio: unknown kind");
}

}  // namespace cfforge
