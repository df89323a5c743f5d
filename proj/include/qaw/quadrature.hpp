#ifndef QAW_QUADRATURE_HPP
#define QAW_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace qaw {

struct QuadratureRule {
  enum class Kind { gauss_legendre, cosine_substitution };

  Kind kind = Kind::cosine_substitution;
  int nodes = 128;
  int adaptive_splits = 12;
  double abs_tol = 1e-13;
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  bool converged = false;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

/// Cached per node count; safe to call concurrently.
const GaussLegendre& gauss_legendre(int n);

/// Adaptive integration of f over [lo, hi]. With cosine_substitution the
/// rule runs in theta for x = mid + half cos(theta), which removes square-root
/// endpoint behaviour. An interval is accepted when the full-interval and
/// two-half estimates agree to abs_tol scaled by its share of [lo, hi].
/// converged is false when adaptive_splits levels were not enough.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureRule& rule = {});

}  // namespace qaw

#endif  // QAW_QUADRATURE_HPP
