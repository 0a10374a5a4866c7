#ifndef CFFORGE_STUDENT_T_HPP
#define CFFORGE_STUDENT_T_HPP

#include <complex>

#include "cfforge/special_fn.hpp"

namespace cfforge {

using ComplexValue = std::complex<double>;

/// Degrees of freedom nu > 0 of Student's t-distribution.
class DegreesOfFreedom {
 public:
  /// Throws std::invalid_argument unless nu is positive and finite.
  explicit DegreesOfFreedom(double nu);

  double value() const { return nu_; }

 private:
  double nu_;
};

/// A characteristic-function sample phi(t) together with the status of the
/// Bessel evaluation behind it.
struct CfValue {
  double t = 0.0;
  ComplexValue value;
  EvalStatus status = EvalStatus::Ok;
};

/// Student's t density
///   Gamma((nu+1)/2) / (sqrt(pi nu) Gamma(nu/2)) * (1 + x^2/nu)^(-(nu+1)/2).
double density(DegreesOfFreedom nu, double x);

/// Closed-form characteristic function
///   phi(t) = K_{nu/2}(z) z^{nu/2} / (Gamma(nu/2) 2^{nu/2-1}),  z = sqrt(nu)|t|,
/// valid for every nu > 0. phi(0) is exactly 1. For z > kArgumentMax the
/// value is reported as 0 with EvalStatus::Underflow.
CfValue cf(DegreesOfFreedom nu, double t);

/// phi'(t) for t != 0, from d/dz (z^mu K_mu(z)) = -z^mu K_{mu-1}(z):
///   phi'(t) = -sign(t) sqrt(nu) z^{nu/2} K_{nu/2-1}(z) / (Gamma(nu/2) 2^{nu/2-1}).
/// Throws std::domain_error at t = 0, where phi is not differentiable for nu <= 1.
CfValue cf_derivative(DegreesOfFreedom nu, double t);

/// C2 = nu^{nu/4} / (2^{nu/2-1} Gamma(nu/2)), the coefficient of
/// t^{nu/2} K_{nu/2}(sqrt(nu) t) in the general solution of the CF's ODE
/// fixed by phi(0) = 1. The coefficient of the I-solution is zero because
/// I grows like e^x while |phi| <= 1.
double normalization_constant(DegreesOfFreedom nu);

/// nu / (nu - 2). Throws std::domain_error for nu <= 2.
double variance(DegreesOfFreedom nu);

/// Relative residual of t phi'' - (nu-1) phi' - nu t phi at t > 0, with phi'
/// analytic and phi'' a central difference of phi' (step 1e-4 t). Normalised
/// by the largest of the three terms.
double cf_ode_residual(DegreesOfFreedom nu, double t);

/// Relative residual of (nu + x^2) f'(x) + (nu + 1) x f(x) with f' by central
/// difference, normalised by the larger of the two terms (absolute when both
/// vanish, as at x = 0).
double density_ode_residual(DegreesOfFreedom nu, double x);

}  // namespace cfforge

#endif  // CFFORGE_STUDENT_T_HPP
