#ifndef QAW_MARKOV_HPP
#define QAW_MARKOV_HPP

// Three-step chain Y -> X -> Z with q-Normal marginal and conditional
// q-Normal transitions, its sampler and Monte Carlo checks.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "qaw/density.hpp"
#include "qaw/qkernel.hpp"
#include "qaw/quadrature.hpp"
#include "qaw/verify.hpp"

namespace qaw {

struct ChainConfig {
  QBase q{0.0};
  double rho1 = 0.0;
  double rho2 = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
  int table_points = 4096;
  int conditioning_points = 64;
};

struct ChainSample {
  double y = 0.0;
  double x = 0.0;
  double z = 0.0;
};

/// Tabulated CDF of a rescaled density (f_N, or f_CN at a fixed y and rho1)
/// with monotone cubic interpolation in both directions.
class InverseCdfTable {
 public:
  InverseCdfTable(std::vector<double> x, std::vector<double> cdf, DensitySpec spec);

  double quantile(double u) const;
  double cdf(double x) const;

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& cdf_values() const { return cdf_; }
  const DensitySpec& spec() const { return spec_; }

 private:
  struct Interp;
  std::vector<double> x_;
  std::vector<double> cdf_;
  DensitySpec spec_;
  std::shared_ptr<const Interp> interp_;
};

/// spec.kind is f_N or f_CN; f_CN conditions on spec.params.y with
/// rho = spec.params.rho1. The grid is cosine-spaced over S(q), each cell
/// integrated with 4-point Gauss-Legendre in the angle, then normalized so the
/// end values are exactly 0 and 1. Knots whose cdf does not rise (underflow in
/// far tails) are merged. Throws InvalidArgument at q = 1 and
/// DegenerateDenominator when a cell has negative mass.
InverseCdfTable build_inverse_cdf(const DensitySpec& spec, int grid_points = 4096);

/// Uniform in (0, 1) at position `counter` of the SplitMix64 stream of `seed`.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

/// Y ~ f_N, X | Y ~ f_CN(.|Y, rho1), Z | X ~ f_CN(.|X, rho2). Sample i uses
/// only counters derived from i, so the output does not depend on threads.
/// Conditional tables sit on conditioning_points equispaced nodes of S(q);
/// between nodes the two quantiles at the same uniform are blended linearly.
/// At q = 1 draws are Gaussian via Box-Muller.
std::vector<ChainSample> sample_chain(const ChainConfig& cfg);

/// Monte Carlo test of the conditional moments given (Y, Z) for degree n:
///   A_n(X|Y,rho1,Z,rho2)                                             -> 0
///   P_n(X|Y,rho1) - rho2^n (rho1^2)_n / (rho1^2 rho2^2)_n P_n(Z|Y,rho1 rho2) -> 0
/// Both residuals are tested pooled and in each cell of an 8x8 grid of
/// marginal quantile bins of (Y, Z). computed holds the worst |mean| / SE;
/// tolerance 4. Throws InvalidArgument when a cell has fewer than 32 samples.
VerificationReport empirical_moment_check(const std::vector<ChainSample>& samples, int n,
                                          const ChainConfig& cfg);

enum class Coordinate { y, x, z };

/// sqrt(n) * sup |F_emp - F_N| for one coordinate; pass at <= 2.28.
VerificationReport marginal_ks_check(const std::vector<ChainSample>& samples, Coordinate c,
                                     const ChainConfig& cfg);

/// Sample correlation of a pair of coordinates against its exact value
/// (rho1, rho2 or rho1 rho2), standard error (1 - r^2) / sqrt(n); pass at 4 SE.
VerificationReport correlation_check(const std::vector<ChainSample>& samples, Coordinate a,
                                     Coordinate b, const ChainConfig& cfg);

/// |int f_CN(x|y,rho1) f_CN(y|z,rho2) dy - f_CN(x|z,rho1 rho2)|.
double chapman_kolmogorov_residual(double x, double z, double rho1, double rho2, QBase q,
                                   const QuadratureRule& rule = {},
                                   const TruncationConfig& trunc = {});

/// Header `y,x,z`, one row per sample, %.17g, LF endings.
void write_csv(std::ostream& os, const std::vector<ChainSample>& samples);

}  // namespace qaw

#endif  // QAW_MARKOV_HPP
