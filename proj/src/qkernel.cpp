#include "qaw/qkernel.hpp"

#include <cmath>
#include <string>

#include "qaw/errors.hpp"

namespace qaw {

QBase::QBase(double q) : q_(q) {
  if (!std::isfinite(q) || q <= -1.0 || q > 1.0)
    throw InvalidArgument("base q must lie in (-1, 1], got " + std::to_string(q));
  if (q == 0.0)
    branch_ = Branch::zero;
  else if (q == 1.0)
    branch_ = Branch::one;
  else
    branch_ = Branch::generic;
}

double qpow(double q, int k) {
  if (k == 0) return 1.0;
  return std::pow(q, k);
}

double q_number(int n, double q) {
  if (n <= 0) return 0.0;
  double s = 0.0, t = 1.0;
  for (int j = 0; j < n; ++j) {
    s += t;
    t *= q;
  }
  return s;
}

double q_factorial(int n, double q) {
  double r = 1.0;
  for (int j = 1; j <= n; ++j) r *= q_number(j, q);
  return r;
}

double q_binomial(int n, int k, double q) {
  if (k < 0 || n < k) return 0.0;
  if (k > n - k) k = n - k;
  if (q == 1.0) {
    // Pascal row; exact in double for the sizes used here.
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
  }
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r *= (1.0 - qpow(q, n - k + j)) / (1.0 - qpow(q, j));
  return r;
}

double q_pochhammer(double a, double q, int n) {
  double r = 1.0, t = a;
  for (int j = 0; j < n; ++j) {
    r *= 1.0 - t;
    t *= q;
  }
  return r;
}

Complex q_pochhammer(Complex a, double q, int n) {
  Complex r = 1.0, t = a;
  for (int j = 0; j < n; ++j) {
    r *= 1.0 - t;
    t *= q;
  }
  return r;
}

namespace {

constexpr int kMaxFactors = 1 << 20;

template <class T>
T pochhammer_inf_impl(T a, const QBase& q, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("q_pochhammer_inf: tol must be positive");
  if (a == T(0)) return T(1);
  if (q.is_zero()) return T(1) - a;
  if (q.is_one()) throw InvalidArgument("q_pochhammer_inf: product diverges at q = 1");
  const double qq = q.value();
  const double tail = 1.0 - std::abs(qq);
  T r = 1.0, t = a;
  for (int j = 0; j < kMaxFactors; ++j) {
    if (std::abs(t) / tail < tol) return r;
    r *= T(1) - t;
    t *= qq;
  }
  throw ConvergenceFailure("q_pochhammer_inf: truncation bound not reached");
}

}  // namespace

Complex q_pochhammer_inf(Complex a, QBase q, double tol) {
  return pochhammer_inf_impl<Complex>(a, q, tol);
}

double q_pochhammer_inf(double a, QBase q, double tol) {
  return pochhammer_inf_impl<double>(a, q, tol);
}

}  // namespace qaw
