#ifndef CFFORGE_TESTS_ORACLES_HPP
#define CFFORGE_TESTS_ORACLES_HPP

// Test-only reference computations. None of these route through the
// library's Bessel or quadrature code.

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace cfforge::testing {

/// I_mu(x) summed term by term from the power series, `terms` terms, in long double.
inline double i_series_bruteforce(double mu, double x, int terms = 200) {
  long double sum = 0.0L;
  for (int k = 0; k < terms; ++k) {
    const long double lk = k;
    sum += std::exp((mu + 2.0L * lk) * std::log(0.5L * x) - std::lgamma(mu + lk + 1.0L) -
                    std::lgamma(lk + 1.0L));
  }
  return static_cast<double>(sum);
}

/// K_mu(x) = 1/2 int_0^inf u^{mu-1} exp(-x (u + 1/u) / 2) du by exp-sinh quadrature
/// on the raw u-integral.
inline double k_integral_quadrature(double mu, double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double u) {
    if (u == 0.0 || std::isinf(u)) return 0.0;
    return std::exp((mu - 1.0) * std::log(u) - 0.5 * x * (u + 1.0 / u));
  };
  return 0.5 * integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
}

inline double k_half_closed_form(double x) {
  return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
}

inline double k_three_halves_closed_form(double x) {
  return k_half_closed_form(x) * (1.0 + 1.0 / x);
}

inline double i_half_closed_form(double x) {
  return std::sqrt(2.0 / (std::numbers::pi * x)) * std::sinh(x);
}

template <typename F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace cfforge::testing

#endif  // CFFORGE_TESTS_ORACLES_HPP
