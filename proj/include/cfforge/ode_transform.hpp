#ifndef CFFORGE_ODE_TRANSFORM_HPP
#define CFFORGE_ODE_TRANSFORM_HPP

// Carries a polynomial-coefficient ODE satisfied by a density over to the ODE
// satisfied by its characteristic function phi(t) = E[e^{itX}].
//
// Under  f  ->  int f(x) e^{itx} dx  each term transforms as
//
//   x^k f^(m)(x)   ->   (-i d/dt)^k [ (-it)^m phi(t) ],
//
// because x e^{itx} = -i d/dt e^{itx}, and m integrations by parts move the
// derivatives off f. This is only valid when every boundary term
// x^j f^(l)(x) e^{itx} vanishes at the ends of the support; the engine does
// not verify decay, callers certify it through `max_density_decay_order`.

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfforge/poly_operator.hpp"

namespace cfforge {

struct TransformLimits {
  int max_degree = 16;
  int max_order = 8;
};

/// Frequency-domain operator annihilating phi whenever `op` annihilates the
/// density. `max_density_decay_order` is the caller's certificate that the
/// density decays fast enough for moments up to that power of x; operators of
/// higher degree are rejected. Throws std::invalid_argument for t-domain
/// input, limit violations or an uncertified degree.
PolyDiffOperator fourier_transform_operator(const PolyDiffOperator& op,
                                            int max_density_decay_order,
                                            const TransformLimits& limits = {});

/// Scales `op` so that the highest-degree coefficient of its highest-order
/// term is 1. The null space is unchanged. Throws std::invalid_argument for
/// the zero operator.
PolyDiffOperator canonicalize(const PolyDiffOperator& op);

/// (nu + x^2) D + (nu + 1) x, the annihilator of Student's t density.
PolyDiffOperator student_t_density_operator(const Rational& nu);

/// x (d2 + d1 x) D + [d1 (d1 + d2) x / 2 - (d1/2 - 1)(d2 + d1 x)], from
/// logarithmic differentiation of x^{d1/2-1} (1 + d1 x / d2)^{-(d1+d2)/2}.
PolyDiffOperator f_density_operator(const Rational& d1, const Rational& d2);

/// Unnormalised F density x^{d1/2-1} (1 + d1 x/d2)^{-(d1+d2)/2}; used only
/// for numerical residual checks of `f_density_operator`.
double f_density_kernel(double d1, double d2, double x);

/// Relative residual of `op` applied numerically to `f` at x using central
/// differences with step h (derivatives up to order 2 supported).
template <typename F>
double numeric_operator_residual(const PolyDiffOperator& op, F&& f, double x, double h);

enum class BesselKind { I, K };

/// max over the grid of the relative residual of
///   x g'' - (nu - 1) g' - nu x g,   g(x) = x^{nu/2} Z_{nu/2}(sqrt(nu) x),
/// with Z = K or I and derivatives by central differences (h = 1e-4 x).
/// Any modified Bessel solution, mapped this way, solves the CF's ODE.
double substitution_lemma_check(double nu, std::span<const double> x_grid, BesselKind kind);

/// {"variable": "t", "order": 2, "terms": [{"order": m, "coefficients":
/// [{"re": "p/q", "im": "p/q"}, ...]}, ...]}; coefficients ascending in power.
nlohmann::json to_json(const PolyDiffOperator& op);

// -- implementation --------------------------------------------------------

template <typename F>
double numeric_operator_residual(const PolyDiffOperator& op, F&& f, double x, double h) {
  const int order = op.order();
  std::vector<std::complex<double>> d(static_cast<std::size_t>(std::max(order, 0)) + 1);
  const double f0 = f(x);
  const double fp = f(x + h);
  const double fm = f(x - h);
  d[0] = f0;
  if (order >= 1) d[1] = (fp - fm) / (2.0 * h);
  if (order >= 2) d[2] = (fp - 2.0 * f0 + fm) / (h * h);
  if (order >= 3) throw std::invalid_argument("numeric_operator_residual: order > 2");
  double scale = 0.0;
  for (int m = 0; m <= order; ++m) {
    scale = std::max(scale, std::abs(op.term(m).evaluate(x) * d[static_cast<std::size_t>(m)]));
  }
  const double r = std::abs(op.apply(x, d));
  return scale > 0.0 ? r / scale : r;
}

}  // namespace cfforge

#endif  // CFFORGE_ODE_TRANSFORM_HPP
