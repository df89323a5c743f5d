#include "qaw/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "qaw/errors.hpp"

namespace qaw {

namespace {

GaussLegendre build_rule(int n) {
  GaussLegendre r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

struct Adaptive {
  const std::function<double(double)>& g;
  const GaussLegendre& rule;
  double tol_per_unit;
  int max_depth;
  double err = 0.0;
  bool ok = true;

  double panel(double a, double b) const {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * g(c + h * rule.x[i]);
    return s * h;
  }

  double run(double a, double b, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double left = panel(a, m), right = panel(m, b);
    const double diff = std::abs(left + right - whole);
    const double tol = std::max(tol_per_unit * (b - a),
                                64.0 * std::numeric_limits<double>::epsilon() * std::abs(left + right));
    if (diff <= tol) {
      err += diff;
      return left + right;
    }
    if (depth >= max_depth) {
      ok = false;
      err += diff;
      return left + right;
    }
    return run(a, m, left, depth + 1) + run(m, b, right, depth + 1);
  }
};

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 2) throw InvalidArgument("quadrature needs at least 2 nodes");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(build_rule(n));
  return *slot;
}

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureRule& rule) {
  if (!(rule.abs_tol > 0.0)) throw InvalidArgument("abs_tol must be positive");
  if (!(hi > lo)) throw InvalidArgument("integration interval must have hi > lo");
  const GaussLegendre& gl = gauss_legendre(rule.nodes);
  std::function<double(double)> g;
  double a, b;
  if (rule.kind == QuadratureRule::Kind::cosine_substitution) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    g = [&f, mid, half](double th) {
      const double s = std::sin(th);
      return s == 0.0 ? 0.0 : f(mid + half * std::cos(th)) * half * s;
    };
    a = 0.0;
    b = std::numbers::pi;
  } else {
    g = f;
    a = lo;
    b = hi;
  }
  Adaptive ad{g, gl, rule.abs_tol / (b - a), rule.adaptive_splits};
  const double whole = ad.panel(a, b);
  const double value = ad.run(a, b, whole, 0);
  return {value, ad.err, ad.ok};
}

}  // namespace qaw
