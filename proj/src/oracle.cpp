#include "cfforge/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace cfforge {

namespace {

constexpr int kWynnWindow = 24;
constexpr int kWynnMinTerms = 8;

// Wynn's epsilon algorithm over `sums`; returns the highest even-column entry
// that uses the newest partial sum.
double wynn_epsilon(std::span<const double> sums) {
  const std::size_t n = sums.size();
  std::vector<double> previous(n + 1, 0.0);  // column k-1
  std::vector<double> current(sums.begin(), sums.end());  // column k
  double best = sums.back();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k);
    for (std::size_t j = 0; j + k < n; ++j) {
      const double diff = current[j + 1] - current[j];
      if (diff == 0.0) return current[j + 1];
      next[j] = previous[j + 1] + 1.0 / diff;
    }
    previous = std::move(current);
    current = std::move(next);
    if (k % 2 == 0) {
      if (!std::isfinite(current.back())) return best;
      best = current.back();
    }
  }
  return best;
}

QuadratureResult normalization_integral(DegreesOfFreedom dof, const QuadratureConfig& cfg) {
  const double nu = dof.value();
  const double peak = density(dof, 0.0);
  const double half_pi = 0.5 * std::numbers::pi;
  // With x = sqrt(nu) tan(theta):  f(x) dx = f(0) sqrt(nu) cos(theta)^(nu-1) dtheta.
  // Near pi/2 the complement argument gives cos(theta) = sin(pi/2 - theta) exactly.
  auto integrand = [&](double theta, double complement) {
    const double c = complement > 0.0 ? std::sin(complement) : std::cos(theta);
    return peak * std::sqrt(nu) * std::pow(c, nu - 1.0);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double half =
      integrator.integrate(integrand, 0.0, half_pi, cfg.abs_tol, &error, &l1, &levels);
  QuadratureResult r;
  r.value = {2.0 * half, 0.0};
  r.error_estimate = 2.0 * error;
  r.subdivisions = static_cast<int>(levels);
  r.status = r.error_estimate <= cfg.abs_tol ? QuadratureStatus::Converged
                                             : QuadratureStatus::SubdivisionLimit;
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.truncation_tail_mass > 0.0)) {
    throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
  }
  if (cfg.max_subdivisions < 10) {
    throw std::invalid_argument("QuadratureConfig: max_subdivisions must be at least 10");
  }
}

double tail_truncation_point(DegreesOfFreedom dof, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("tail_truncation_point: mass must be positive");
  const double nu = dof.value();
  // int_A^inf c nu^{(nu+1)/2} x^{-(nu+1)} dx = c nu^{(nu-1)/2} A^{-nu}  <  mass
  const double log_c = std::log(density(dof, 0.0));
  const double log_a = (log_c + 0.5 * (nu - 1.0) * std::log(nu) - std::log(mass)) / nu;
  return std::max(std::sqrt(nu), std::exp(std::min(log_a, 700.0)));
}

QuadratureResult cf_by_quadrature(DegreesOfFreedom dof, double t, const QuadratureConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(t)) throw std::invalid_argument("cf_by_quadrature: t must be finite");
  if (t == 0.0) return normalization_integral(dof, cfg);

  const double freq = std::abs(t);
  const double width = std::numbers::pi / freq;
  const double cutoff = tail_truncation_point(dof, cfg.truncation_tail_mass);
  const double bulk = 3.0 * std::sqrt(dof.value());
  auto integrand = [&](double x) { return std::cos(freq * x) * density(dof, x); };

  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
  std::vector<double> partial_sums;
  std::size_t first_smooth = 0;
  bool have_first_smooth = false;
  double sum = 0.0;
  double panel_error = 0.0;
  double previous_estimate = std::numeric_limits<double>::quiet_NaN();
  int stable_steps = 0;

  QuadratureResult r;
  for (int k = 0; k < cfg.max_subdivisions; ++k) {
    const double a = k * width;
    const double b = (k + 1) * width;
    double err = 0.0;
    sum += Kronrod::integrate(integrand, a, b, 12, 1e-12, &err);
    panel_error += err;
    partial_sums.push_back(sum);
    r.subdivisions = k + 1;

    if (b >= cutoff) {
      r.value = {2.0 * sum, 0.0};
      r.error_estimate = 2.0 * (panel_error + cfg.truncation_tail_mass);
      r.status = QuadratureStatus::Converged;
      return r;
    }
    if (!have_first_smooth && a >= bulk) {
      first_smooth = partial_sums.size() - 1;
      have_first_smooth = true;
    }
    if (!have_first_smooth) continue;
    const std::size_t available = partial_sums.size() - first_smooth;
    if (available < static_cast<std::size_t>(kWynnMinTerms)) continue;
    const std::size_t window = std::min<std::size_t>(available, kWynnWindow);
    const double estimate =
        wynn_epsilon(std::span<const double>(partial_sums).last(window));
    const double change = std::abs(estimate - previous_estimate);
    previous_estimate = estimate;
    stable_steps = change < 0.05 * cfg.abs_tol ? stable_steps + 1 : 0;
    if (stable_steps >= 2) {
      r.value = {2.0 * estimate, 0.0};
      r.error_estimate = 2.0 * (panel_error + change);
      r.status = QuadratureStatus::Converged;
      return r;
    }
  }
  r.value = {2.0 * (std::isfinite(previous_estimate) ? previous_estimate : sum), 0.0};
  r.error_estimate = std::numeric_limits<double>::infinity();
  r.status = QuadratureStatus::SubdivisionLimit;
  return r;
}

std::uint64_t derive_block_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

std::vector<ComplexValue> cf_empirical(DegreesOfFreedom dof, std::span<const double> t_grid,
                                       const McConfig& cfg) {
  if (cfg.sample_count < 1000) {
    throw std::invalid_argument("cf_empirical: sample_count must be at least 1000");
  }
  const double nu = dof.value();
  const std::size_t n = cfg.sample_count;
  const std::size_t blocks = (n + kMcBlockSize - 1) / kMcBlockSize;
  const std::size_t grid = t_grid.size();
  std::vector<std::vector<ComplexValue>> partial(blocks, std::vector<ComplexValue>(grid));

  auto run_block = [&](std::size_t b) {
    std::mt19937_64 engine(derive_block_seed(cfg.rng_seed, b));
    std::normal_distribution<double> normal;
    std::gamma_distribution<double> chi_square(0.5 * nu, 2.0);
    const std::size_t begin = b * kMcBlockSize;
    const std::size_t end = std::min(n, begin + kMcBlockSize);
    std::vector<double> re(grid, 0.0);
    std::vector<double> im(grid, 0.0);
    for (std::size_t s = begin; s < end; ++s) {
      const double z = normal(engine);
      const double v = chi_square(engine);
      const double x = z / std::sqrt(v / nu);
      for (std::size_t j = 0; j < grid; ++j) {
        const double arg = t_grid[j] * x;
        re[j] += std::cos(arg);
        im[j] += std::sin(arg);
      }
    }
    for (std::size_t j = 0; j < grid; ++j) partial[b][j] = {re[j], im[j]};
  };

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, blocks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) run_block(b);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<ComplexValue> out(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
      re += partial[b][j].real();
      im += partial[b][j].imag();
    }
    out[j] = {re / static_cast<double>(n), im / static_cast<double>(n)};
  }
  return out;
}

double recursion_residual(DegreesOfFreedom dof, double t) {
  if (!(t > 0.0)) throw std::domain_error("recursion_residual: requires t > 0");
  const double nu = dof.value();
  const double s = std::sqrt(nu / (nu + 2.0));
  const double lhs = cf(dof, t).value.real();
  const double rhs = s / t * cf_derivative(DegreesOfFreedom(nu + 2.0), s * t).value.real();
  return std::abs(lhs + rhs) / std::abs(lhs);
}

}  // namespace cfforge
