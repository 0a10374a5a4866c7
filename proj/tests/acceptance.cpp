// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cfforge/checks.hpp"
#include "cfforge/ode_transform.hpp"
#include "cfforge/oracle.hpp"
#include "cfforge/special_fn.hpp"
#include "cfforge/student_t.hpp"

using namespace cfforge;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome at_most(double measured, double tol) {
  return {measured <= tol, "max " + fmt(measured) + " <= " + fmt(tol)};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * k / (n - 1));
  return out;
}

Outcome closed_form_anchors() {
  const double r3 = std::sqrt(3.0);
  double worst = 0.0;
  for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 5.0}) {
    worst = std::max(worst, std::abs(cf(DegreesOfFreedom(1.0), t).value.real() - std::exp(-t)));
    worst = std::max(worst, std::abs(cf(DegreesOfFreedom(3.0), t).value.real() -
                                     std::exp(-r3 * t) * (1.0 + r3 * t)));
  }
  return at_most(worst, 1e-10);
}

Outcome quadrature_agreement() {
  double worst = 0.0;
  for (double nu : kNuGrid) {
    for (double t : kOracleTGrid) {
      const DegreesOfFreedom dof(nu);
      const auto q = cf_by_quadrature(dof, t);
      if (!q.converged()) return {false, "quadrature did not converge at nu=" + fmt(nu)};
      worst = std::max(worst, std::abs(cf(dof, t).value - q.value));
    }
  }
  return at_most(worst, 1e-8);
}

Outcome cf_ode() {
  double worst = 0.0;
  for (double nu : kNuGrid) {
    for (double t : linspace(0.1, 10.0, 100)) {
      worst = std::max(worst, cf_ode_residual(DegreesOfFreedom(nu), t));
    }
  }
  return at_most(worst, 1e-6);
}

Outcome symbolic_derivation() {
  int mismatches = 0;
  for (const Rational nu : {Rational(1, 2), Rational(1), Rational(3), Rational(22, 7)}) {
    const auto derived =
        canonicalize(fourier_transform_operator(student_t_density_operator(nu), 2));
    PolyDiffOperator expected(VariableTag::TFrequency);
    expected.add_term(2, Poly::variable());
    expected.add_term(1, Poly(RationalComplex(Rational(1 - nu))));
    expected.add_term(0, Poly::monomial(RationalComplex(Rational(-nu)), 1));
    if (!(derived == expected)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " of 4 exact forms differ"};
}

Outcome recursion() {
  double worst = 0.0;
  for (double nu : {0.3, 0.5, 1.0, 2.0, 5.0}) {
    for (double t : {0.1, 0.5, 1.0, 5.0}) {
      worst = std::max(worst, recursion_residual(DegreesOfFreedom(nu), t));
    }
  }
  return at_most(worst, 1e-8);
}

Outcome suite_passes(Suite suite) {
  int failed = 0;
  std::string first;
  const auto results = run_suite(suite);
  for (const auto& r : results) {
    if (r.passed) continue;
    if (failed++ == 0) first = "; first failure: " + r.name;
  }
  return {failed == 0,
          std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
              " checks pass" + first};
}

Outcome cf_axioms_and_psd() {
  int violations = 0;
  for (double nu : kNuGrid) {
    const DegreesOfFreedom dof(nu);
    if (cf(dof, 0.0).value != ComplexValue(1.0, 0.0)) ++violations;
    for (double t : linspace(-20.0, 20.0, 161)) {
      const auto v = cf(dof, t).value;
      if (std::abs(v) > 1.0 || v.imag() != 0.0 || v != cf(dof, -t).value) ++violations;
    }
  }
  double min_eig = 1.0;
  for (double nu : kNuGrid) {
    min_eig = std::min(min_eig, cf_gram_min_eigenvalue(DegreesOfFreedom(nu), linspace(0, 4, 8)));
  }
  return {violations == 0 && min_eig >= -1e-8,
          std::to_string(violations) + " axiom violations, min eigenvalue " + fmt(min_eig) +
              " >= -1e-08"};
}

Outcome variance_from_second_difference() {
  const double h = 1e-3;
  bool ok = true;
  std::string detail;
  for (double nu : {2.5, 3.0, 5.0}) {
    const DegreesOfFreedom dof(nu);
    const double second = -(cf(dof, h).value.real() - 2.0 + cf(dof, -h).value.real()) / (h * h);
    const double rel = std::abs(second / variance(dof) - 1.0);
    ok = ok && rel <= 1e-3;
    detail += (detail.empty() ? "" : ", ") + std::string("nu=") + fmt(nu) + ": " + fmt(rel);
  }
  return {ok, "relative error " + detail + " (tol 1e-03)"};
}

Outcome monte_carlo() {
  const McConfig cfg;  // N = 1e6
  const double band = 4.0 / std::sqrt(static_cast<double>(cfg.sample_count));
  const auto grid = linspace(0.0, 5.0, 11);
  double worst = 0.0;
  for (double nu : {1.0, 3.0, 5.0}) {
    const DegreesOfFreedom dof(nu);
    const auto empirical = cf_empirical(dof, grid, cfg);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      worst = std::max(worst, std::abs(empirical[j] - cf(dof, grid[j]).value));
    }
  }
  McConfig one = cfg;
  one.workers = 1;
  McConfig four = cfg;
  four.workers = 4;
  const bool same = cf_empirical(DegreesOfFreedom(3.0), grid, one) ==
                    cf_empirical(DegreesOfFreedom(3.0), grid, four);
  return {worst <= band && same, "max " + fmt(worst) + " <= " + fmt(band) +
                                     (same ? ", 1 vs 4 workers identical"
                                           : ", 1 vs 4 workers DIFFER")};
}

Outcome substitution_lemma() {
  const std::vector<double> grid = {0.5, 1.0, 2.0, 5.0};
  double worst = 0.0;
  for (double nu : {1.0, 3.0}) {
    worst = std::max(worst, substitution_lemma_check(nu, grid, BesselKind::K));
    worst = std::max(worst, substitution_lemma_check(nu, grid, BesselKind::I));
  }
  return at_most(worst, 1e-5);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"closed-form anchors nu=1, nu=3", closed_form_anchors},
      {"closed form vs Fourier quadrature", quadrature_agreement},
      {"CF satisfies t phi'' - (nu-1) phi' - nu t phi = 0", cf_ode},
      {"exact symbolic CF ODE for nu in {1/2, 1, 3, 22/7}", symbolic_derivation},
      {"nu -> nu+2 derivative recursion", recursion},
      {"Bessel invariant suite", [] { return suite_passes(Suite::Bessel); }},
      {"CF axioms and positive semidefiniteness", cf_axioms_and_psd},
      {"variance from second difference at h=1e-3", variance_from_second_difference},
      {"Monte Carlo agreement and worker independence", monte_carlo},
      {"substitution lemma for K and I", substitution_lemma},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s criterion %zu: %s (%s)\n", o.passed ? "PASS" : "FAIL", k + 1,
                criteria[k].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
