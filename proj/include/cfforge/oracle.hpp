#ifndef CFFORGE_ORACLE_HPP
#define CFFORGE_ORACLE_HPP

// Ground truth for the closed-form characteristic function that never touches
// the Bessel route: direct Fourier quadrature of the density, the empirical
// CF of simulated variates, and the nu -> nu + 2 derivative recursion.

#include <cstdint>
#include <span>
#include <vector>

#include "cfforge/student_t.hpp"

namespace cfforge {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double truncation_tail_mass = 1e-12;
  int max_subdivisions = 2000;
};

enum class QuadratureStatus { Converged, SubdivisionLimit };

struct QuadratureResult {
  ComplexValue value;
  double error_estimate = 0.0;
  QuadratureStatus status = QuadratureStatus::Converged;
  int subdivisions = 0;

  bool converged() const { return status == QuadratureStatus::Converged; }
};

/// Throws std::invalid_argument unless tolerances are positive and
/// max_subdivisions >= 10.
void validate(const QuadratureConfig& cfg);

/// x beyond which the density's tail mass is below `mass`, from the bound
/// f(x) <= c nu^{(nu+1)/2} x^{-(nu+1)} valid for x >= sqrt(nu).
double tail_truncation_point(DegreesOfFreedom nu, double mass);

/// E[e^{itX}] = 2 int_0^inf cos(tx) f(x) dx by quadrature of the density.
///
/// t = 0 is integrated on (0, pi/2) after x = sqrt(nu) tan(theta), which
/// removes the heavy tail. For t != 0 the half-line is cut at x_k = k pi/|t|;
/// each panel is integrated by adaptive Gauss-Kronrod and the alternating
/// panel sums are either truncated where the tail mass is negligible or
/// extrapolated with Wynn's epsilon algorithm. The imaginary part is exactly 0.
QuadratureResult cf_by_quadrature(DegreesOfFreedom nu, double t, const QuadratureConfig& cfg = {});

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct McConfig {
  std::size_t sample_count = 1'000'000;
  std::uint64_t rng_seed = kDefaultSeed;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Samples per independently seeded block. Results do not depend on the
/// number of workers because blocks, not workers, own the random streams.
inline constexpr std::size_t kMcBlockSize = 1u << 16;

/// Seed of block `index` derived from the run seed with SplitMix64.
std::uint64_t derive_block_seed(std::uint64_t seed, std::uint64_t index);

/// (1/N) sum_j e^{i t X_j} at every t in the grid, with X = Z / sqrt(V / nu),
/// Z standard normal and V chi-square(nu). Throws std::invalid_argument for
/// sample_count < 1000.
std::vector<ComplexValue> cf_empirical(DegreesOfFreedom nu, std::span<const double> t_grid,
                                       const McConfig& cfg = {});

/// |phi_nu(t) + (1/t) s phi'_{nu+2}(s t)| / |phi_nu(t)|,  s = sqrt(nu/(nu+2)):
/// the identity that carries the CF from nu + 2 down to nu. Throws
/// std::domain_error unless t > 0.
double recursion_residual(DegreesOfFreedom nu, double t);

}  // namespace cfforge

#endif  // CFFORGE_ORACLE_HPP
