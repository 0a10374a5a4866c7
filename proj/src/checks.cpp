#include "cfforge/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "cfforge/ode_transform.hpp"
#include "cfforge/special_fn.hpp"
#include "cfforge/student_t.hpp"

namespace cfforge {

namespace {

CheckResult at_most(std::string suite, std::string name, double measured, double threshold) {
  return {std::move(suite), std::move(name), measured, Relation::AtMost, threshold,
          measured <= threshold};
}

CheckResult at_least(std::string suite, std::string name, double measured, double threshold) {
  return {std::move(suite), std::move(name), measured, Relation::AtLeast, threshold,
          measured >= threshold};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
  return out;
}

std::string nu_label(double nu) {
  std::string s = std::to_string(nu);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return "nu=" + s;
}

void bessel_suite(std::vector<CheckResult>& out) {
  const std::string suite = "bessel";
  const std::array orders = {0.3, 0.5, 1.0, 1.5, 2.7};
  const std::array args = {0.5, 1.0, 2.0, 5.0, 10.0};

  double ode_i = 0.0;
  double ode_k = 0.0;
  double wronskian = 0.0;
  double symmetry = 0.0;
  for (double mu : orders) {
    for (double x : args) {
      ode_i = std::max(ode_i, bessel_ode_residual(mu, x, true));
      ode_k = std::max(ode_k, bessel_ode_residual(mu, x, false));
      wronskian = std::max(wronskian, std::abs(wronskian_defect(mu, x)));
      symmetry = std::max(symmetry, std::abs(bessel_k(-mu, x).value - bessel_k(mu, x).value));
    }
  }
  out.push_back(at_most(suite, "modified Bessel ODE residual, I", ode_i, 1e-6));
  out.push_back(at_most(suite, "modified Bessel ODE residual, K", ode_k, 1e-6));
  out.push_back(at_most(suite, "Wronskian I K' - I' K = -1/x (relative)", wronskian, 1e-8));
  out.push_back(at_most(suite, "K_{-mu} = K_mu (absolute difference)", symmetry, 0.0));

  out.push_back(at_most(suite, "K limiting form, mu=1, x=1e-4 (|ratio-1|)",
                        std::abs(limiting_form_ratio(1.0, LimitingForm::KsmallX, 1e-4) - 1.0),
                        1e-3));
  out.push_back(at_most(suite, "I limiting form, mu=0.5, x=50 (|ratio-1|)",
                        std::abs(limiting_form_ratio(0.5, LimitingForm::IlargeX, 50.0) - 1.0),
                        1e-2));

  double recurrence = 0.0;
  for (double u : {0.1, 0.5, 1.5, 10.3}) {
    recurrence = std::max(recurrence,
                          std::abs(gamma(u + 1.0).value / (u * gamma(u).value) - 1.0));
  }
  out.push_back(at_most(suite, "Gamma(u+1) = u Gamma(u) (relative)", recurrence, 1e-12));

  int violations = 0;
  const auto grid = linspace(0.05, 20.0, 200);
  for (double mu : orders) {
    for (std::size_t j = 1; j < grid.size(); ++j) {
      if (!(bessel_k(mu, grid[j]).value < bessel_k(mu, grid[j - 1]).value)) ++violations;
      if (!(bessel_i(mu, grid[j]).value > bessel_i(mu, grid[j - 1]).value)) ++violations;
    }
  }
  out.push_back(at_most(suite, "monotonicity violations (K decreasing, I increasing)",
                        violations, 0.0));
}

void cf_suite(std::vector<CheckResult>& out, const SuiteOptions& options) {
  const std::string suite = "cf";
  const auto t_grid = linspace(-20.0, 20.0, 161);

  int axiom_violations = 0;
  for (double nu : kNuGrid) {
    const DegreesOfFreedom dof(nu);
    if (cf(dof, 0.0).value != ComplexValue(1.0, 0.0)) ++axiom_violations;
    for (double t : t_grid) {
      const auto v = cf(dof, t).value;
      if (std::abs(v) > 1.0 || v.imag() != 0.0 || !(v.real() > 0.0)) ++axiom_violations;
      if (v != cf(dof, -t).value) ++axiom_violations;
    }
  }
  out.push_back(at_most(suite, "CF axioms (phi(0)=1, |phi|<=1, real, even, positive) violations",
                        axiom_violations, 0.0));

  const auto psd_grid = linspace(0.0, 4.0, 8);
  for (double nu : kNuGrid) {
    out.push_back(at_least(suite, "8x8 Gram matrix min eigenvalue, " + nu_label(nu),
                           cf_gram_min_eigenvalue(DegreesOfFreedom(nu), psd_grid), -1e-8));
  }

  for (double nu : kNuGrid) {
    double worst = 0.0;
    for (double t : kOracleTGrid) {
      const DegreesOfFreedom dof(nu);
      worst = std::max(worst, std::abs(cf(dof, t).value - cf_by_quadrature(dof, t).value));
    }
    out.push_back(at_most(suite, "closed form vs quadrature, " + nu_label(nu), worst, 1e-8));
  }

  const auto ode_grid = linspace(0.1, 10.0, 100);
  for (double nu : kNuGrid) {
    double worst = 0.0;
    for (double t : ode_grid) worst = std::max(worst, cf_ode_residual(DegreesOfFreedom(nu), t));
    out.push_back(at_most(suite, "CF ODE t phi'' - (nu-1) phi' - nu t phi, " + nu_label(nu),
                          worst, 1e-6));
  }

  const auto x_grid = linspace(-5.0, 5.0, 101);
  double density_worst = 0.0;
  for (double nu : kNuGrid) {
    for (double x : x_grid) {
      density_worst = std::max(density_worst, density_ode_residual(DegreesOfFreedom(nu), x));
    }
  }
  out.push_back(at_most(suite, "density ODE (nu+x^2) f' + (nu+1) x f", density_worst, 1e-8));

  for (double nu : {2.5, 3.0, 5.0}) {
    const DegreesOfFreedom dof(nu);
    const double h = 1e-3;
    const double second = -(cf(dof, h).value.real() - 2.0 + cf(dof, -h).value.real()) / (h * h);
    out.push_back(at_most(suite, "variance from second difference at h=1e-3, " + nu_label(nu),
                          std::abs(second / variance(dof) - 1.0), 1e-3));
  }

  if (!options.monte_carlo) return;
  const auto mc_grid = linspace(0.0, 5.0, 11);
  const double band = 4.0 / std::sqrt(static_cast<double>(options.mc.sample_count));
  for (double nu : {1.0, 3.0, 5.0}) {
    const DegreesOfFreedom dof(nu);
    const auto empirical = cf_empirical(dof, mc_grid, options.mc);
    double worst = 0.0;
    for (std::size_t j = 0; j < mc_grid.size(); ++j) {
      worst = std::max(worst, std::abs(empirical[j] - cf(dof, mc_grid[j]).value));
    }
    out.push_back(at_most(suite, "Monte Carlo |empirical - closed form|, " + nu_label(nu), worst,
                          band));
  }
  McConfig single = options.mc;
  single.workers = 1;
  McConfig several = options.mc;
  several.workers = 4;
  const bool identical = cf_empirical(DegreesOfFreedom(3.0), mc_grid, single) ==
                         cf_empirical(DegreesOfFreedom(3.0), mc_grid, several);
  out.push_back(at_most(suite, "Monte Carlo 1-worker vs 4-worker mismatches", identical ? 0 : 1,
                        0.0));
}

void ode_suite(std::vector<CheckResult>& out) {
  const std::string suite = "ode";
  int mismatches = 0;
  for (const char* text : {"1/2", "1", "3", "22/7"}) {
    const Rational nu = parse_rational(text);
    const auto derived =
        canonicalize(fourier_transform_operator(student_t_density_operator(nu), 2));
    PolyDiffOperator expected(VariableTag::TFrequency);
    expected.add_term(2, Poly::variable());
    expected.add_term(1, Poly(RationalComplex(Rational(1 - nu))));
    expected.add_term(0, Poly::monomial(RationalComplex(Rational(-nu)), 1));
    if (!(derived == expected)) ++mismatches;
  }
  out.push_back(at_most(suite, "symbolic CF ODE equals t D2 - (nu-1) D1 - nu t (mismatches)",
                        mismatches, 0.0));

  double annihilation = 0.0;
  for (const char* text : {"1/2", "1", "3", "22/7"}) {
    for (double t : linspace(0.5, 5.0, 19)) {
      annihilation = std::max(annihilation, derived_operator_annihilation(parse_rational(text), t));
    }
  }
  out.push_back(at_most(suite, "derived operator annihilates closed-form CF", annihilation, 1e-5));

  double f_residual = 0.0;
  for (auto [d1, d2] : {std::pair{2, 2}, std::pair{1, 1}, std::pair{5, 3}, std::pair{3, 7}}) {
    const auto op = f_density_operator(Rational(d1), Rational(d2));
    for (double x : linspace(0.1, 5.0, 50)) {
      f_residual = std::max(
          f_residual, numeric_operator_residual(
                          op, [&](double v) { return f_density_kernel(d1, d2, v); }, x, 1e-5 * x));
    }
  }
  out.push_back(at_most(suite, "F density operator residual", f_residual, 1e-8));

  const std::array k_nu1 = {0.5, 1.0, 2.0, 5.0};
  const std::array k_nu3 = {0.5, 1.0, 2.0};
  out.push_back(at_most(suite, "substitution lemma, K, nu=1",
                        substitution_lemma_check(1.0, k_nu1, BesselKind::K), 1e-5));
  out.push_back(at_most(suite, "substitution lemma, K, nu=3",
                        substitution_lemma_check(3.0, k_nu3, BesselKind::K), 1e-5));
  for (double nu : {1.0, 3.0}) {
    out.push_back(at_most(suite, "substitution lemma, I, " + nu_label(nu),
                          substitution_lemma_check(nu, k_nu3, BesselKind::I), 1e-5));
  }
}

void recursion_suite(std::vector<CheckResult>& out) {
  for (double nu : {0.3, 0.5, 1.0, 2.0, 5.0}) {
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 5.0}) {
      worst = std::max(worst, recursion_residual(DegreesOfFreedom(nu), t));
    }
    out.push_back(at_most("recursion", "nu -> nu+2 recursion residual, " + nu_label(nu), worst,
                          1e-8));
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "bessel") return Suite::Bessel;
  if (name == "cf") return Suite::Cf;
  if (name == "ode") return Suite::Ode;
  if (name == "recursion") return Suite::Recursion;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Bessel:
      return "bessel";
    case Suite::Cf:
      return "cf";
    case Suite::Ode:
      return "ode";
    case Suite::Recursion:
      return "recursion";
    case Suite::All:
      return "all";
  }
  return "unknown";
}

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  if (suite == Suite::Bessel || suite == Suite::All) bessel_suite(out);
  if (suite == Suite::Cf || suite == Suite::All) cf_suite(out, options);
  if (suite == Suite::Ode || suite == Suite::All) ode_suite(out);
  if (suite == Suite::Recursion || suite == Suite::All) recursion_suite(out);
  return out;
}

double cf_gram_min_eigenvalue(DegreesOfFreedom nu, std::span<const double> t_grid) {
  const auto n = static_cast<Eigen::Index>(t_grid.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      gram(j, k) = cf(nu, t_grid[static_cast<std::size_t>(j)] -
                              t_grid[static_cast<std::size_t>(k)])
                       .value.real();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double wronskian_defect(double mu, double x) {
  const double i0 = bessel_i(mu, x).value;
  const double k0 = bessel_k(mu, x).value;
  const double di = bessel_i(mu + 1.0, x).value + mu / x * i0;
  const double dk = -0.5 * (bessel_k(mu - 1.0, x).value + bessel_k(mu + 1.0, x).value);
  return -x * (i0 * dk - di * k0) - 1.0;
}

double bessel_ode_residual(double mu, double x, bool first_kind) {
  auto f = [&](double v) { return first_kind ? bessel_i(mu, v).value : bessel_k(mu, v).value; };
  const double h = 1e-4 * x;
  const double f0 = f(x);
  const double fp = f(x + h);
  const double fm = f(x - h);
  const double a = x * x * (fp - 2.0 * f0 + fm) / (h * h);
  const double b = x * (fp - fm) / (2.0 * h);
  const double c = (x * x + mu * mu) * f0;
  return std::abs(a + b - c) / (std::abs(a) + std::abs(b) + std::abs(c));
}

double derived_operator_annihilation(const Rational& nu, double t) {
  const auto op = canonicalize(fourier_transform_operator(student_t_density_operator(nu), 2));
  const DegreesOfFreedom dof(to_double(nu));
  const double h = 1e-4 * t;
  const std::array<std::complex<double>, 3> derivs = {
      cf(dof, t).value,
      cf_derivative(dof, t).value,
      (cf_derivative(dof, t + h).value - cf_derivative(dof, t - h).value) / (2.0 * h),
  };
  double scale = 0.0;
  for (int m = 0; m <= op.order(); ++m) {
    scale = std::max(scale, std::abs(op.term(m).evaluate(t) * derivs[static_cast<std::size_t>(m)]));
  }
  return std::abs(op.apply(t, derivs)) / scale;
}

}  // namespace cfforge
