#ifndef QAW_STRUCTURAL_HPP
#define QAW_STRUCTURAL_HPP

#include "qaw/qkernel.hpp"

namespace qaw {

/// v(x|t) = 1 - 2xt + t^2.
inline double v_poly(double x, double t) { return 1.0 - 2.0 * x * t + t * t; }
inline Complex v_poly(double x, Complex t) { return 1.0 - 2.0 * x * t + t * t; }

/// l(x|a) = (1 + a)^2 - 4ax^2.
inline double l_poly(double x, double a) { return (1.0 + a) * (1.0 + a) - 4.0 * a * x * x; }

/// omega(x,y|rho) = (1-rho^2)^2 - 4xy rho (1+rho^2) + 4 rho^2 (x^2+y^2).
inline double omega(double x, double y, double rho) {
  const double r2 = rho * rho;
  return (1.0 - r2) * (1.0 - r2) - 4.0 * x * y * rho * (1.0 + r2) + 4.0 * r2 * (x * x + y * y);
}

}  // namespace qaw

#endif  // QAW_STRUCTURAL_HPP
