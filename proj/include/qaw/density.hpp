#ifndef QAW_DENSITY_HPP
#define QAW_DENSITY_HPP

// Orthogonalizing densities of the scheme, their rescaled q-Normal
// versions, norms, and the kernel expansions of density ratios.

#include <optional>
#include <string>
#include <utility>

#include "qaw/families.hpp"
#include "qaw/params.hpp"
#include "qaw/qkernel.hpp"
#include "qaw/structural.hpp"

namespace qaw {

struct TruncationConfig {
  double product_tol = 1e-14;
  int series_terms = 400;
  double series_tol = 1e-15;
};

/// Defaults with product_tol taken from QAW_DEFAULT_TOL when set.
TruncationConfig default_truncation();

/// Number of factors kept in an infinite product over q^i:
/// 1 + ceil(log(tol) / log|q|), and 1 at q = 0.
int product_length(double q, double tol);

/// 1 / prod_{i>=0} v(x | t q^i).
double phi_h(double x, double t, QBase q, const TruncationConfig& trunc = {});
Complex phi_h(double x, Complex t, QBase q, const TruncationConfig& trunc = {});

/// q-Hermite weight; zero outside (-1, 1).
double f_h_density(double x, QBase q, const TruncationConfig& trunc = {});

/// Al-Salam-Chihara weight with conjugate parameters rho e^{+-i eta}, y = cos(eta).
double f_p_density(double x, double y, double rho, QBase q, const TruncationConfig& trunc = {});

/// AW weight with two conjugate pairs, from real omega products.
double f_w_density(double x, double y, double rho1, double z, double rho2, QBase q,
                   const TruncationConfig& trunc = {});

enum class DensityKind { f_h, f_AW, f_psi, f_Q, f_bH, f_p, f_W, f_N, f_CN, f_C2N };

const char* density_name(DensityKind k);
DensityKind parse_density(const std::string& name);

/// Scheme densities. f_AW/f_psi/f_Q/f_bH use a..d with the usual zeroing
/// (f_psi drops a, f_Q drops a and b, f_bH keeps only d). f_p uses (z, rho2)
/// and f_W uses all four conjugate values, matching the ASC and AW
/// families evaluated on the same parameter set.
double density_scheme(DensityKind kind, double x, const SchemeParams& p,
                      const TruncationConfig& trunc = {});

/// f_AW assembled factor by factor (f_h, four phi_h, normalizer); the
/// fused product in density_scheme must agree with it.
double density_aw_factored(double x, const SchemeParams& p, const TruncationConfig& trunc = {});

/// Density of the family's orthogonality measure.
DensityKind density_for(Family f);

/// Rescaled densities on S(q). Arguments: f_N uses x; f_CN uses (x|y, rho1);
/// f_C2N uses (x|y, rho1, z, rho2). Zero outside S(q).
struct RescaledDensityArgs {
  double y = 0.0;
  double rho1 = 0.0;
  double z = 0.0;
  double rho2 = 0.0;
  double q = 0.0;
};

double density_rescaled(DensityKind kind, double x, const RescaledDensityArgs& args,
                        const TruncationConfig& trunc = {});

double f_n_density(double x, double q, const TruncationConfig& trunc = {});
double f_cn_density(double x, double y, double rho, double q, const TruncationConfig& trunc = {});
double f_c2n_density(double x, double y, double rho1, double z, double rho2, double q,
                     const TruncationConfig& trunc = {});

/// Half-width of S(q) = [-2/sqrt(1-q), 2/sqrt(1-q)]; infinity at q = 1.
double support_radius(double q);

/// A density with all of its parameters.
struct DensitySpec {
  DensityKind kind = DensityKind::f_h;
  SchemeParams params;  // for rescaled kinds: y, rho1, z, rho2, q
  TruncationConfig trunc;
};

double evaluate(const DensitySpec& spec, double x);
/// Integration interval; at q = 1 a window of +-14 standard deviations.
std::pair<double, double> support(const DensitySpec& spec);

/// Squared norm of the family's n-th polynomial under its density:
/// (ab,ac,ad,bc,bd,cd,q)_n / ((abcd)_{2n} (abcd q^{n-1})_n).
double norm_squared(Family family, int n, const SchemeParams& p);

enum class KernelKind { poisson_mehler, aw_forward, aw_inverse, c2h_sum };

const char* kernel_name(KernelKind k);
KernelKind parse_kernel(const std::string& name);

struct KernelResult {
  double value = 0.0;
  int terms = 0;
  bool converged = false;
  std::optional<double> closed_form;
  double max_term = 0.0;  // largest |term|; bounds the attainable accuracy
};

/// Partial sums of the density-ratio expansions at x:
///   poisson_mehler: sum rho^j h_j(x) h_j(y) / (q)_j          = f_p / f_h, uses (y, rho1)
///   aw_forward:     sum rho2^j p_j(z|y,rho1 rho2) p_j(x|y,rho1) / (q,T)_j = f_W / f_p(.|y,rho1)
///   aw_inverse:     sum over w_j(x) with g_j(z|y,rho1 rho2 q^{j-1}) = f_p(.|y,rho1) / f_W
///   c2h_sum:        sum a^j psi_j(x|b,c,d) / (abcd,q)_j       = f_AW / f_psi
/// with T = rho1^2 rho2^2. Conjugate kinds take p.y, p.rho1, p.z, p.rho2.
/// Summation stops after three consecutive terms below series_tol * |sum|.
/// c2h_sum also reports the product closed form (ab,ac,ad)_inf phi_h(x|a)/(abcd)_inf.
KernelResult kernel_sum(KernelKind kind, double x, const SchemeParams& p,
                        const TruncationConfig& trunc = {});

/// Closed-form density ratio each kernel sum converges to.
double kernel_target(KernelKind kind, double x, const SchemeParams& p,
                     const TruncationConfig& trunc = {});

}  // namespace qaw

#endif  // QAW_DENSITY_HPP
