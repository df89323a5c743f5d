#ifndef QAW_QKERNEL_HPP
#define QAW_QKERNEL_HPP

// Floating-point primitives of q-calculus: q-numbers, q-binomials and
// finite/infinite q-Pochhammer symbols over real and complex arguments.
//
// Finite quantities accept any real base q (including |q| > 1, which the
// base-inversion identities need). Quantities that only exist for |q| < 1
// take a QBase.

#include <complex>
#include <cstdint>

namespace qaw {

using Complex = std::complex<double>;

/// Base q in (-1, 1] with explicit flags for the two degenerate values.
class QBase {
 public:
  enum class Branch { generic, zero, one };

  QBase() = default;
  /// Throws InvalidArgument unless -1 < q <= 1.
  QBase(double q);  // NOLINT(google-explicit-constructor)

  double value() const { return q_; }
  Branch branch() const { return branch_; }
  bool is_zero() const { return branch_ == Branch::zero; }
  bool is_one() const { return branch_ == Branch::one; }
  operator double() const { return q_; }  // NOLINT(google-explicit-constructor)

 private:
  double q_ = 0.0;
  Branch branch_ = Branch::zero;
};

/// q^k for integer k with the convention q^0 = 1 (also at q = 0).
double qpow(double q, int k);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
double q_number(int n, double q);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
double q_factorial(int n, double q);

/// Gaussian binomial coefficient; 0 unless n >= k >= 0.
double q_binomial(int n, int k, double q);

/// (a; q)_n = prod_{j<n} (1 - a q^j); empty product is 1.
double q_pochhammer(double a, double q, int n);
Complex q_pochhammer(Complex a, double q, int n);

/// (a; q)_inf truncated once |a q^N| / (1 - |q|) < tol.
/// Throws InvalidArgument at q = 1 unless a = 0.
Complex q_pochhammer_inf(Complex a, QBase q, double tol = 1e-14);
double q_pochhammer_inf(double a, QBase q, double tol = 1e-14);

/// Binomial C(n, 2) = n(n-1)/2 as a signed exponent.
constexpr int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace qaw

#endif  // QAW_QKERNEL_HPP
