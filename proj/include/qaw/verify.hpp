#ifndef QAW_VERIFY_HPP
#define QAW_VERIFY_HPP

#include <string>
#include <vector>

#include "qaw/density.hpp"
#include "qaw/families.hpp"
#include "qaw/params.hpp"
#include "qaw/quadrature.hpp"

namespace qaw {

/// One checked quantity. abs_err = |computed - target|; rel_err divides by
/// the check's scale (|target| or a max-term magnitude). passed compares
/// the error named by the check against `tolerance`.
struct VerificationReport {
  std::string name;
  double target = 0.0;
  double computed = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
  double tolerance = 0.0;
};

/// Fixed-width text table, one row per report.
std::string format_reports(const std::vector<VerificationReport>& reports);

/// Gram matrix of the family under its density against diag(norm_squared).
/// Row-major (n_max+1)^2 reports. Diagonal: relative error <= 1e-6.
/// Off-diagonal: |integral| <= 1e-8 * max(norm_m, norm_n).
std::vector<VerificationReport> check_orthogonality(Family family, int n_max, const SchemeParams& p,
                                                    const QuadratureRule& rule = {},
                                                    const TruncationConfig& trunc = {});

enum class ExpansionKind {
  theorem_main_wp,
  theorem_main_pw,
  kernel_pm,
  kernel_aw_fwd,
  kernel_aw_inv,
  c2h_closed_form,
  conversion
};

const char* expansion_name(ExpansionKind k);
ExpansionKind parse_expansion(const std::string& name);

/// Worst discrepancy over the grid.
///   theorem_main_*: degrees 0..n_max at each x; error relative to the
///     largest expansion term, tolerance 1e-9.
///   kernel_*: partial sum against the density ratio at each x, relative to
///     max(|ratio|, largest series term), tolerance 1e-8. c2h_closed_form
///     also compares with the product form.
///   conversion: grid values are cos(theta), eta = acos(p.z), t = p.rho1;
///     all n, m <= min(n_max, 6); |lhs - rhs| and |Im| <= 1e-10.
VerificationReport check_expansion(ExpansionKind kind, const SchemeParams& p,
                                   const std::vector<double>& grid, int n_max = 8,
                                   const TruncationConfig& trunc = {});

/// calka1: integral of p_n(.|y,rho1) against f_W versus
///   rho2^n (rho1^2)_n / (T)_n p_n(z|y,rho1 rho2).
/// calka2: integral of w_n against f_p(.|y,rho1) versus
///   rho2^n (rho1^2)_n / (T q^{n-1})_n g_n(z|y,rho1 rho2 q^{n-1}).
/// Relative error with scale max(|closed form|, integral of |integrand|),
/// tolerance 1e-7.
enum class MomentKind { calka1, calka2 };
VerificationReport check_conditional_moment(int n, const SchemeParams& p, MomentKind kind,
                                            const QuadratureRule& rule = {},
                                            const TruncationConfig& trunc = {});

/// |integral of the density - 1| <= 1e-8.
VerificationReport check_normalization(const DensitySpec& spec, const QuadratureRule& rule = {});

}  // namespace qaw

#endif  // QAW_VERIFY_HPP
