#ifndef CFFORGE_SPECIAL_FN_HPP
#define CFFORGE_SPECIAL_FN_HPP

// Gamma and modified Bessel functions of real order and positive argument.
//
// K is evaluated from its integral representation after the substitution
// u = e^s, which turns it into  K_mu(x) = int_0^inf exp(-x cosh s) cosh(mu s) ds.
// The integrand is even and analytic in a strip around the real axis, so the
// trapezoidal rule converges geometrically in 1/h. I is summed from its power
// series, switching to the large-argument expansion for x > 30.

#include <string_view>

namespace cfforge {

enum class EvalStatus { Ok, Underflow, Overflow };

std::string_view to_string(EvalStatus status);

struct EvalResult {
  double value = 0.0;
  EvalStatus status = EvalStatus::Ok;

  bool ok() const { return status == EvalStatus::Ok; }
};

/// Largest accepted Bessel argument. e^x stays representable below it.
inline constexpr double kArgumentMax = 700.0;

/// Largest u for which Gamma(u) is finite in double precision.
inline constexpr double kGammaArgumentMax = 170.0;

/// Gamma(u) for u > 0 via a g=7, 9-term Lanczos sum. Overflow past 170.
/// Throws std::domain_error for u <= 0 or non-finite u.
EvalResult gamma(double u);

/// I_mu(x) for mu >= 0, x > 0. Overflow (value +inf) for x > kArgumentMax.
EvalResult bessel_i(double mu, double x);

/// K_mu(x) for any real mu, x > 0. K_{-mu} is computed as K_{|mu|}.
/// Underflow (value 0) once the result drops below the smallest normal
/// double or x exceeds kArgumentMax.
EvalResult bessel_k(double mu, double x);

/// e^x K_mu(x); stays finite for large x where K itself underflows.
EvalResult bessel_k_scaled(double mu, double x);

/// log K_mu(x); finite wherever the integral is, even when K itself over- or
/// underflows.
double bessel_k_log(double mu, double x);

/// d/dx (x^mu K_mu(x)) = -x^mu K_{mu-1}(x).
EvalResult bessel_k_weighted_derivative(double mu, double x);

enum class LimitingForm {
  IlargeX,  ///< I_mu(x) / (e^x / sqrt(2 pi x)), requires x >= 30
  KsmallX,  ///< K_mu(x) / (2^(mu-1) Gamma(mu) x^-mu), requires x <= 1e-3
};

/// Ratio of the function to its leading-order limiting form. Tends to 1 in
/// the regime's limit. Throws std::domain_error outside the regime or for
/// mu <= 0.
double limiting_form_ratio(double mu, LimitingForm kind, double x);

}  // namespace cfforge

#endif  // CFFORGE_SPECIAL_FN_HPP
