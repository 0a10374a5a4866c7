#ifndef CFFORGE_CHECKS_HPP
#define CFFORGE_CHECKS_HPP

// Invariant suites behind `cf check`. Each check reports the measured
// quantity next to its threshold so reports can be read without the code.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfforge/oracle.hpp"
#include "cfforge/rational_complex.hpp"

namespace cfforge {

enum class Suite { Bessel, Cf, Ode, Recursion, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

enum class Relation { AtMost, AtLeast };

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  Relation relation = Relation::AtMost;
  double threshold = 0.0;
  bool passed = false;
};

struct SuiteOptions {
  McConfig mc;
  bool monte_carlo = true;
};

/// Standard grids.
inline const std::vector<double> kNuGrid = {0.3, 0.5, 1.0, 2.0, 2.5, 3.0, 4.5, 10.0};
inline const std::vector<double> kOracleTGrid = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& options = {});

/// Smallest eigenvalue of [phi(t_j - t_k)] on `t_grid`.
double cf_gram_min_eigenvalue(DegreesOfFreedom nu, std::span<const double> t_grid);

/// Wronskian I K' - I' K scaled by -x, minus 1 (so 0 is exact), with
/// K' = -(K_{mu-1} + K_{mu+1})/2 and I' = I_{mu+1} + (mu/x) I_mu.
double wronskian_defect(double mu, double x);

/// Relative residual of x^2 f'' + x f' - (x^2 + mu^2) f for f = I_mu or K_mu,
/// derivatives by central differences with h = 1e-4 x, normalised by the sum
/// of the three term magnitudes.
double bessel_ode_residual(double mu, double x, bool first_kind);

/// Residual of the canonical frequency-domain Student-t operator derived
/// symbolically for `nu`, applied to the closed-form CF at t.
double derived_operator_annihilation(const Rational& nu, double t);

}  // namespace cfforge

#endif  // CFFORGE_CHECKS_HPP
