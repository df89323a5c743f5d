#include "qaw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "qaw/connect.hpp"
#include "qaw/errors.hpp"

namespace qaw {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

double quad_or_throw(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureRule& rule, const std::string& what) {
  const auto r = integrate(f, lo, hi, rule);
  if (!r.converged) throw ConvergenceFailure(what + ": quadrature did not converge");
  return r.value;
}

// Keeps the worst (largest rel_err) sample seen so far.
struct Worst {
  double target = 0.0, computed = 0.0, abs_err = 0.0, rel_err = -1.0;
  void offer(double t, double c, double scale) {
    const double ae = std::abs(c - t);
    const double re = ae / scale;
    if (re > rel_err) {
      target = t;
      computed = c;
      abs_err = ae;
      rel_err = re;
    }
  }
};

VerificationReport finish(std::string name, const Worst& w, double tol, const Stopwatch& sw) {
  VerificationReport r;
  r.name = std::move(name);
  r.target = w.target;
  r.computed = w.computed;
  r.abs_err = w.abs_err;
  r.rel_err = std::max(w.rel_err, 0.0);
  r.tolerance = tol;
  r.passed = r.rel_err <= tol;
  r.runtime_ms = sw.ms();
  return r;
}

}  // namespace

std::string format_reports(const std::vector<VerificationReport>& reports) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-40s %-6s %12s %12s %10s %10s\n", "name", "status", "abs_err",
                "rel_err", "tolerance", "ms");
  out += line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-40s %-6s %12.3e %12.3e %10.1e %10.1f\n", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.abs_err, r.rel_err, r.tolerance, r.runtime_ms);
    out += line;
  }
  return out;
}

std::vector<VerificationReport> check_orthogonality(Family family, int n_max, const SchemeParams& p,
                                                    const QuadratureRule& rule,
                                                    const TruncationConfig& trunc) {
  if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
  const DensityKind dk = density_for(family);
  std::vector<double> norms(n_max + 1);
  for (int n = 0; n <= n_max; ++n) norms[n] = norm_squared(family, n, p);
  const int N = n_max + 1;
  std::vector<VerificationReport> out(static_cast<size_t>(N) * N);
  for (int m = 0; m <= n_max; ++m)
    for (int n = m; n <= n_max; ++n) {
      Stopwatch sw;
      const double v = quad_or_throw(
          [&](double x) {
            const auto s = eval_scheme_seq(family, n, x, p).values;
            return s[m] * s[n] * density_scheme(dk, x, p, trunc);
          },
          -1.0, 1.0, rule, "orthogonality");
      VerificationReport r;
      r.name = std::string("orthogonality.") + family_name(family) + "[" + std::to_string(m) + "," +
               std::to_string(n) + "]";
      r.computed = v;
      if (m == n) {
        r.target = norms[n];
        r.abs_err = std::abs(v - r.target);
        r.rel_err = r.abs_err / std::abs(r.target);
        r.tolerance = 1e-6;
      } else {
        r.target = 0.0;
        r.abs_err = std::abs(v);
        r.rel_err = r.abs_err / std::max(std::abs(norms[m]), std::abs(norms[n]));
        r.tolerance = 1e-8;
      }
      r.passed = r.rel_err <= r.tolerance;
      r.runtime_ms = sw.ms();
      out[static_cast<size_t>(m) * N + n] = r;
      if (m != n) {
        r.name = std::string("orthogonality.") + family_name(family) + "[" + std::to_string(n) + "," +
                 std::to_string(m) + "]";
        out[static_cast<size_t>(n) * N + m] = r;
      }
    }
  return out;
}

const char* expansion_name(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::theorem_main_wp: return "theorem_main_wp";
    case ExpansionKind::theorem_main_pw: return "theorem_main_pw";
    case ExpansionKind::kernel_pm: return "kernel_pm";
    case ExpansionKind::kernel_aw_fwd: return "kernel_aw_fwd";
    case ExpansionKind::kernel_aw_inv: return "kernel_aw_inv";
    case ExpansionKind::c2h_closed_form: return "c2h_closed_form";
    case ExpansionKind::conversion: return "conversion";
  }
  return "?";
}

ExpansionKind parse_expansion(const std::string& name) {
  for (auto k : {ExpansionKind::theorem_main_wp, ExpansionKind::theorem_main_pw,
                 ExpansionKind::kernel_pm, ExpansionKind::kernel_aw_fwd, ExpansionKind::kernel_aw_inv,
                 ExpansionKind::c2h_closed_form, ExpansionKind::conversion})
    if (name == expansion_name(k)) return k;
  throw InvalidArgument("unknown expansion '" + name + "'");
}

VerificationReport check_expansion(ExpansionKind kind, const SchemeParams& p,
                                   const std::vector<double>& grid, int n_max,
                                   const TruncationConfig& trunc) {
  Stopwatch sw;
  Worst w;
  const std::string name = std::string("expansion.") + expansion_name(kind);
  switch (kind) {
    case ExpansionKind::theorem_main_wp:
    case ExpansionKind::theorem_main_pw: {
      const bool wp = kind == ExpansionKind::theorem_main_wp;
      const auto M = connection_w_p(n_max, p, wp ? Direction::forward : Direction::backward);
      for (double x : grid) {
        const auto ps = eval_p_seq(n_max, x, p.y, p.rho1, p.q).values;
        const auto ws = eval_w_seq(n_max, x, p).values;
        const auto& basis = wp ? ps : ws;
        const auto& lhs = wp ? ws : ps;
        for (int n = 0; n <= n_max; ++n) {
          double s = 0.0, mt = std::abs(lhs[n]);
          for (int j = 0; j <= n; ++j) {
            const double t = M.at(j, n) * basis[j];
            s += t;
            mt = std::max(mt, std::abs(t));
          }
          w.offer(lhs[n], s, std::max(mt, 1e-300));
        }
      }
      return finish(name, w, 1e-9, sw);
    }
    case ExpansionKind::kernel_pm:
    case ExpansionKind::kernel_aw_fwd:
    case ExpansionKind::kernel_aw_inv:
    case ExpansionKind::c2h_closed_form: {
      const KernelKind kk = kind == ExpansionKind::kernel_pm       ? KernelKind::poisson_mehler
                            : kind == ExpansionKind::kernel_aw_fwd ? KernelKind::aw_forward
                            : kind == ExpansionKind::kernel_aw_inv ? KernelKind::aw_inverse
                                                                   : KernelKind::c2h_sum;
      for (double x : grid) {
        const auto r = kernel_sum(kk, x, p, trunc);
        if (!r.converged) throw ConvergenceFailure(name + ": kernel sum did not converge");
        const double target = kernel_target(kk, x, p, trunc);
        w.offer(target, r.value, std::max(std::abs(target), r.max_term));
        if (r.closed_form)
          w.offer(*r.closed_form, r.value, std::max(std::abs(*r.closed_form), r.max_term));
      }
      return finish(name, w, 1e-8, sw);
    }
    case ExpansionKind::conversion: {
      const int top = std::min(n_max, 6);
      const double eta = std::acos(p.z);
      for (double g : grid) {
        const double theta = std::acos(std::clamp(g, -1.0, 1.0));
        for (int n = 0; n <= top; ++n)
          for (int m = 0; m <= top; ++m) {
            const auto s = conversion_sides(n, m, theta, eta, p.rho1, p.q);
            w.offer(s.rhs.real(), s.lhs.real(), 1.0);
            w.offer(0.0, s.lhs.imag(), 1.0);
          }
      }
      return finish(name, w, 1e-10, sw);
    }
  }
  throw InvalidArgument("unknown expansion kind");
}

VerificationReport check_conditional_moment(int n, const SchemeParams& p, MomentKind kind,
                                            const QuadratureRule& rule,
                                            const TruncationConfig& trunc) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (p.form != SchemeParams::Form::conjugate)
    throw InvalidArgument("conditional moments need conjugate parameters");
  Stopwatch sw;
  const double q = p.q, r1 = p.rho1, r2 = p.rho2;
  const double T = r1 * r1 * r2 * r2;
  const QBase qb(q);
  std::function<double(double)> integrand;
  double target;
  if (kind == MomentKind::calka1) {
    integrand = [&](double x) {
      return eval_p(n, x, p.y, r1, q) * f_w_density(x, p.y, r1, p.z, r2, qb, trunc);
    };
    target = std::pow(r2, n) * q_pochhammer(r1 * r1, q, n) / q_pochhammer(T, q, n) *
             eval_p(n, p.z, p.y, r1 * r2, q);
  } else {
    integrand = [&](double x) { return eval_w(n, x, p) * f_p_density(x, p.y, r1, qb, trunc); };
    target = n == 0 ? 1.0
                    : std::pow(r2, n) * q_pochhammer(r1 * r1, q, n) /
                          q_pochhammer(T * qpow(q, n - 1), q, n) *
                          eval_g(n, p.z, p.y, r1 * r2 * qpow(q, n - 1), q);
  }
  const double lhs = quad_or_throw(integrand, -1.0, 1.0, rule, "conditional moment");
  // Only a scale: |integrand| has kinks at the polynomial's zeros.
  QuadratureRule loose = rule;
  loose.abs_tol = 1e-6;
  const double l1 = integrate([&](double x) { return std::abs(integrand(x)); }, -1.0, 1.0, loose).value;
  Worst w;
  w.offer(target, lhs, std::max({std::abs(target), l1, 1e-300}));
  return finish(std::string("conditional_moment.") + (kind == MomentKind::calka1 ? "calka1" : "calka2") +
                    "[n=" + std::to_string(n) + "]",
                w, 1e-7, sw);
}

VerificationReport check_normalization(const DensitySpec& spec, const QuadratureRule& rule) {
  Stopwatch sw;
  const auto [lo, hi] = support(spec);
  QuadratureRule r = rule;
  if (spec.params.q == 1.0) r.kind = QuadratureRule::Kind::gauss_legendre;
  const double v = quad_or_throw([&](double x) { return evaluate(spec, x); }, lo, hi, r,
                                 "normalization");
  Worst w;
  w.offer(1.0, v, 1.0);
  return finish(std::string("normalization.") + density_name(spec.kind), w, 1e-8, sw);
}

}  // namespace qaw
