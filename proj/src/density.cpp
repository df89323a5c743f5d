#include "qaw/density.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "qaw/errors.hpp"

namespace qaw {

namespace {

constexpr double kPi = std::numbers::pi;

double gauss(double x, double mean, double var) {
  const double d = x - mean;
  return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
}

void require_inner(double q) {
  if (q == 1.0) throw InvalidArgument("this density needs |q| < 1");
}

double pinf(double a, double q, const TruncationConfig& t) { return q_pochhammer_inf(a, QBase(q), t.product_tol); }
Complex pinf(Complex a, double q, const TruncationConfig& t) { return q_pochhammer_inf(a, QBase(q), t.product_tol); }

// prod over i < N of v(x | t q^i) in complex arithmetic.
Complex v_product(double x, Complex t, double q, int N) {
  Complex r = 1.0;
  for (int i = 0; i < N; ++i) {
    r *= v_poly(x, t);
    t *= q;
  }
  return r;
}

Complex aw_normalizer(const SchemeParams& p, const TruncationConfig& t) {
  const Complex a = p.a, b = p.b, c = p.c, d = p.d;
  Complex num = 1.0;
  for (Complex pr : {a * b, a * c, a * d, b * c, b * d, c * d}) num *= pinf(pr, p.q, t);
  const Complex den = pinf(a * b * c * d, p.q, t);
  if (std::abs(den) < 1e-300) throw DegenerateDenominator("(abcd)_inf vanishes");
  return num / den;
}

// Terms added until three in a row fall below tol * |sum|.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(double tol) : tol_(tol) {}
  bool add(double term) {
    sum_ += term;
    max_term_ = std::max(max_term_, std::abs(term));
    ++terms_;
    small_ = std::abs(term) < tol_ * std::abs(sum_) ? small_ + 1 : 0;
    return small_ >= 3;
  }
  KernelResult result(bool converged) const {
    return {sum_, terms_, converged, std::nullopt, max_term_};
  }

 private:
  double tol_;
  double sum_ = 0.0;
  double max_term_ = 0.0;
  int terms_ = 0;
  int small_ = 0;
};

}  // namespace

TruncationConfig default_truncation() {
  TruncationConfig t;
  if (const char* env = std::getenv("QAW_DEFAULT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
      throw InvalidArgument(std::string("QAW_DEFAULT_TOL is not a positive decimal: ") + env);
    t.product_tol = v;
  }
  return t;
}

int product_length(double q, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("product tolerance must be positive");
  require_inner(q);
  if (q == 0.0) return 1;
  return 1 + static_cast<int>(std::ceil(std::log(tol) / std::log(std::abs(q))));
}

double phi_h(double x, double t, QBase q, const TruncationConfig& trunc) {
  require_inner(q);
  const int N = product_length(q, trunc.product_tol);
  double r = 1.0, s = t;
  for (int i = 0; i < N; ++i) {
    const double v = v_poly(x, s);
    if (v <= 0.0) throw InvalidArgument("phi_h: non-positive factor v(x|t q^i)");
    r *= v;
    s *= q.value();
  }
  return 1.0 / r;
}

Complex phi_h(double x, Complex t, QBase q, const TruncationConfig& trunc) {
  require_inner(q);
  return 1.0 / v_product(x, t, q, product_length(q, trunc.product_tol));
}

double f_h_density(double x, QBase q, const TruncationConfig& trunc) {
  require_inner(q);
  if (!(std::abs(x) < 1.0)) return 0.0;
  const int N = product_length(q, trunc.product_tol);
  double r = 2.0 * pinf(q.value(), q, trunc) * std::sqrt(1.0 - x * x) / kPi;
  double qi = q.value();
  for (int i = 1; i <= N; ++i) {
    r *= l_poly(x, qi);
    qi *= q.value();
  }
  return r;
}

double f_p_density(double x, double y, double rho, QBase q, const TruncationConfig& trunc) {
  const double fh = f_h_density(x, q, trunc);
  if (fh == 0.0) return 0.0;
  const int N = product_length(q, trunc.product_tol);
  double den = 1.0, r = rho;
  for (int i = 0; i < N; ++i) {
    den *= omega(x, y, r);
    r *= q.value();
  }
  return fh * pinf(rho * rho, q, trunc) / den;
}

double f_w_density(double x, double y, double rho1, double z, double rho2, QBase q,
                   const TruncationConfig& trunc) {
  const double fh = f_h_density(x, q, trunc);
  if (fh == 0.0) return 0.0;
  const int N = product_length(q, trunc.product_tol);
  double ratio = 1.0, qj = 1.0;
  for (int j = 0; j < N; ++j) {
    ratio *= omega(y, z, rho1 * rho2 * qj) / (omega(x, y, rho1 * qj) * omega(x, z, rho2 * qj));
    qj *= q.value();
  }
  const double T = rho1 * rho1 * rho2 * rho2;
  const double den = pinf(T, q, trunc);
  if (den == 0.0) throw DegenerateDenominator("(rho1^2 rho2^2)_inf vanishes");
  return fh * pinf(rho1 * rho1, q, trunc) * pinf(rho2 * rho2, q, trunc) / den * ratio;
}

const char* density_name(DensityKind k) {
  switch (k) {
    case DensityKind::f_h: return "f_h";
    case DensityKind::f_AW: return "f_AW";
    case DensityKind::f_psi: return "f_psi";
    case DensityKind::f_Q: return "f_Q";
    case DensityKind::f_bH: return "f_bH";
    case DensityKind::f_p: return "f_p";
    case DensityKind::f_W: return "f_W";
    case DensityKind::f_N: return "f_N";
    case DensityKind::f_CN: return "f_CN";
    case DensityKind::f_C2N: return "f_C2N";
  }
  return "?";
}

DensityKind parse_density(const std::string& name) {
  for (auto k : {DensityKind::f_h, DensityKind::f_AW, DensityKind::f_psi, DensityKind::f_Q,
                 DensityKind::f_bH, DensityKind::f_p, DensityKind::f_W, DensityKind::f_N,
                 DensityKind::f_CN, DensityKind::f_C2N})
    if (name == density_name(k)) return k;
  throw InvalidArgument("unknown density '" + name + "'");
}

DensityKind density_for(Family f) {
  switch (f) {
    case Family::AW: return DensityKind::f_AW;
    case Family::C2H: return DensityKind::f_psi;
    case Family::ASC: return DensityKind::f_Q;
    case Family::BQH: return DensityKind::f_bH;
    case Family::QH: return DensityKind::f_h;
  }
  return DensityKind::f_h;
}

double density_scheme(DensityKind kind, double x, const SchemeParams& p,
                      const TruncationConfig& trunc) {
  switch (kind) {
    case DensityKind::f_h: return f_h_density(x, p.q, trunc);
    case DensityKind::f_p: return f_p_density(x, p.z, p.rho2, p.q, trunc);
    case DensityKind::f_W: return f_w_density(x, p.y, p.rho1, p.z, p.rho2, p.q, trunc);
    case DensityKind::f_AW:
    case DensityKind::f_psi:
    case DensityKind::f_Q:
    case DensityKind::f_bH: {
      const Family fam = kind == DensityKind::f_AW    ? Family::AW
                         : kind == DensityKind::f_psi ? Family::C2H
                         : kind == DensityKind::f_Q   ? Family::ASC
                                                      : Family::BQH;
      const SchemeParams r = restrict_params(fam, p);
      const double fh = f_h_density(x, r.q, trunc);
      if (fh == 0.0) return 0.0;
      const int N = product_length(r.q, trunc.product_tol);
      Complex prod = 1.0;
      Complex ta = r.a, tb = r.b, tc = r.c, td = r.d;
      for (int i = 0; i < N; ++i) {
        prod *= v_poly(x, ta) * v_poly(x, tb) * v_poly(x, tc) * v_poly(x, td);
        ta *= r.q;
        tb *= r.q;
        tc *= r.q;
        td *= r.q;
      }
      return (fh * aw_normalizer(r, trunc) / prod).real();
    }
    case DensityKind::f_N:
    case DensityKind::f_CN:
    case DensityKind::f_C2N:
      return density_rescaled(kind, x, {p.y, p.rho1, p.z, p.rho2, p.q}, trunc);
  }
  throw InvalidArgument("unknown density kind");
}

double density_aw_factored(double x, const SchemeParams& p, const TruncationConfig& trunc) {
  const QBase q(p.q);
  Complex r = f_h_density(x, q, trunc);
  for (Complex t : {p.a, p.b, p.c, p.d}) r *= phi_h(x, t, q, trunc);
  return (r * aw_normalizer(p, trunc)).real();
}

double support_radius(double q) {
  if (q == 1.0) return INFINITY;
  return 2.0 / std::sqrt(1.0 - q);
}

double f_n_density(double x, double q, const TruncationConfig& trunc) {
  if (q == 1.0) return gauss(x, 0.0, 1.0);
  const double s = std::sqrt(1.0 - q) / 2.0;
  return f_h_density(x * s, q, trunc) * s;
}

double f_cn_density(double x, double y, double rho, double q, const TruncationConfig& trunc) {
  if (q == 1.0) return gauss(x, rho * y, 1.0 - rho * rho);
  const double s = std::sqrt(1.0 - q) / 2.0;
  return f_p_density(x * s, y * s, rho, q, trunc) * s;
}

double f_c2n_density(double x, double y, double rho1, double z, double rho2, double q,
                     const TruncationConfig& trunc) {
  if (q != 1.0 && !(std::abs(x) < support_radius(q))) return 0.0;
  const double den = f_cn_density(y, z, rho1 * rho2, q, trunc);
  if (den == 0.0) throw DegenerateDenominator("f_CN(y|z, rho1 rho2) vanishes");
  return f_cn_density(y, x, rho1, q, trunc) * f_cn_density(x, z, rho2, q, trunc) / den;
}

double density_rescaled(DensityKind kind, double x, const RescaledDensityArgs& g,
                        const TruncationConfig& trunc) {
  switch (kind) {
    case DensityKind::f_N: return f_n_density(x, g.q, trunc);
    case DensityKind::f_CN: return f_cn_density(x, g.y, g.rho1, g.q, trunc);
    case DensityKind::f_C2N: return f_c2n_density(x, g.y, g.rho1, g.z, g.rho2, g.q, trunc);
    default: throw InvalidArgument("not a rescaled density kind");
  }
}

double evaluate(const DensitySpec& spec, double x) {
  return density_scheme(spec.kind, x, spec.params, spec.trunc);
}

std::pair<double, double> support(const DensitySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case DensityKind::f_N:
    case DensityKind::f_CN:
    case DensityKind::f_C2N: {
      if (p.q != 1.0) {
        const double r = support_radius(p.q);
        return {-r, r};
      }
      double c = 0.0;
      if (spec.kind == DensityKind::f_CN) c = p.rho1 * p.y;
      if (spec.kind == DensityKind::f_C2N)
        c = rescaled_a_coeffs(0, p.y, p.rho1, p.z, p.rho2, 1.0).e;
      return {c - 14.0, c + 14.0};
    }
    default: return {-1.0, 1.0};
  }
}

double norm_squared(Family family, int n, const SchemeParams& p) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  const SchemeParams r = restrict_params(family, p);
  const double q = r.q;
  const Complex X = r.abcd();
  Complex num = q_pochhammer(q, q, n);
  for (Complex pr : {r.a * r.b, r.a * r.c, r.a * r.d, r.b * r.c, r.b * r.d, r.c * r.d})
    num *= q_pochhammer(pr, q, n);
  Complex den = q_pochhammer(X, q, 2 * n);
  if (n > 0) den *= q_pochhammer(X * qpow(q, n - 1), q, n);
  if (std::abs(den) < 1e-300) throw DegenerateDenominator("norm: vanishing denominator");
  return (num / den).real();
}

const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::poisson_mehler: return "poisson_mehler";
    case KernelKind::aw_forward: return "aw_forward";
    case KernelKind::aw_inverse: return "aw_inverse";
    case KernelKind::c2h_sum: return "c2h_sum";
  }
  return "?";
}

KernelKind parse_kernel(const std::string& name) {
  for (auto k : {KernelKind::poisson_mehler, KernelKind::aw_forward, KernelKind::aw_inverse,
                 KernelKind::c2h_sum})
    if (name == kernel_name(k)) return k;
  throw InvalidArgument("unknown kernel '" + name + "'");
}

KernelResult kernel_sum(KernelKind kind, double x, const SchemeParams& p,
                        const TruncationConfig& trunc) {
  require_inner(p.q);
  const int N = trunc.series_terms;
  if (N < 1) throw InvalidArgument("series_terms must be at least 1");
  const double q = p.q;
  SeriesAccumulator acc(trunc.series_tol);
  switch (kind) {
    case KernelKind::poisson_mehler: {
      const auto hx = eval_h_seq(N, x, q).values;
      const auto hy = eval_h_seq(N, p.y, q).values;
      double coef = 1.0;
      for (int j = 0; j < N; ++j) {
        if (acc.add(coef * hx[j] * hy[j])) return acc.result(true);
        coef *= p.rho1 / (1.0 - qpow(q, j + 1));
      }
      return acc.result(false);
    }
    case KernelKind::aw_forward: {
      const double T = p.rho1 * p.rho1 * p.rho2 * p.rho2;
      const auto pz = eval_p_seq(N, p.z, p.y, p.rho1 * p.rho2, q).values;
      const auto px = eval_p_seq(N, x, p.y, p.rho1, q).values;
      double coef = 1.0;
      for (int j = 0; j < N; ++j) {
        if (acc.add(coef * pz[j] * px[j])) return acc.result(true);
        coef *= p.rho2 / ((1.0 - qpow(q, j + 1)) * (1.0 - T * qpow(q, j)));
      }
      return acc.result(false);
    }
    case KernelKind::aw_inverse: {
      const double T = p.rho1 * p.rho1 * p.rho2 * p.rho2;
      const auto w = eval_w_seq(N, x, p).values;
      double coef = 1.0;  // (T)_{2j} rho2^j / ((q)_j (rho2^2)_j prod_k omega)
      for (int j = 0; j < N; ++j) {
        const double g = j == 0 ? 1.0 : eval_g(j, p.z, p.y, p.rho1 * p.rho2 * qpow(q, j - 1), q);
        if (acc.add(coef * g * w[j])) return acc.result(true);
        const double om = omega(p.y, p.z, p.rho1 * p.rho2 * qpow(q, j));
        if (om < 1e-12) throw InvalidArgument("aw_inverse: omega factor below 1e-12");
        coef *= (1.0 - T * qpow(q, 2 * j)) * (1.0 - T * qpow(q, 2 * j + 1)) * p.rho2 /
                ((1.0 - qpow(q, j + 1)) * (1.0 - p.rho2 * p.rho2 * qpow(q, j)) * om);
      }
      return acc.result(false);
    }
    case KernelKind::c2h_sum: {
      const auto psi = eval_scheme_seq(Family::C2H, N, x, p).values;
      const Complex X = p.abcd();
      Complex coef = 1.0;
      KernelResult res;
      for (int j = 0; j < N; ++j) {
        if (acc.add((coef * psi[j]).real())) {
          res = acc.result(true);
          break;
        }
        coef *= p.a / ((1.0 - X * qpow(q, j)) * (1.0 - qpow(q, j + 1)));
      }
      if (res.terms == 0) res = acc.result(false);
      const Complex a = p.a;
      const Complex cf = pinf(a * p.b, q, trunc) * pinf(a * p.c, q, trunc) * pinf(a * p.d, q, trunc) /
                         pinf(X, q, trunc) * phi_h(x, a, QBase(q), trunc);
      res.closed_form = cf.real();
      return res;
    }
  }
  throw InvalidArgument("unknown kernel kind");
}

double kernel_target(KernelKind kind, double x, const SchemeParams& p,
                     const TruncationConfig& trunc) {
  const QBase q(p.q);
  switch (kind) {
    case KernelKind::poisson_mehler:
      return f_p_density(x, p.y, p.rho1, q, trunc) / f_h_density(x, q, trunc);
    case KernelKind::aw_forward:
      return f_w_density(x, p.y, p.rho1, p.z, p.rho2, q, trunc) /
             f_p_density(x, p.y, p.rho1, q, trunc);
    case KernelKind::aw_inverse:
      return f_p_density(x, p.y, p.rho1, q, trunc) /
             f_w_density(x, p.y, p.rho1, p.z, p.rho2, q, trunc);
    case KernelKind::c2h_sum:
      return density_scheme(DensityKind::f_AW, x, p, trunc) /
             density_scheme(DensityKind::f_psi, x, p, trunc);
  }
  throw InvalidArgument("unknown kernel kind");
}

}  // namespace qaw
