#include "qaw/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "qaw/connect.hpp"
#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/families.hpp"
#include "qaw/markov.hpp"
#include "qaw/structural.hpp"

namespace qaw {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr double kPi = 3.14159265358979323846;
constexpr double kQGrid[] = {-0.5, 0.0, 0.3, 0.7, 0.95};

// Seeded draws from the same counter stream as the sampler.
class Draws {
 public:
  Draws(std::uint64_t seed, std::uint64_t stream) : seed_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * counter_uniform(seed_, counter_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Worst case over many comparisons, reported as one row.
class Worst {
 public:
  Worst(std::string name, double tol) : name_(std::move(name)), tol_(tol), t0_(Clock::now()) {}

  void offer(double target, double computed, double scale) {
    const double ae = std::abs(computed - target);
    const double re = scale > 0.0 ? ae / scale : ae;
    record(target, computed, ae, re, tol_, !(re <= tol_));
  }

  // A failing report outranks any passing one; otherwise the larger error wins.
  void offer_report(const VerificationReport& r) {
    record(r.target, r.computed, r.abs_err, r.rel_err, r.tolerance, !r.passed);
  }

  VerificationReport finish() const {
    VerificationReport r = r_;
    r.name = name_;
    r.passed = count_ > 0 && !failed_;
    r.runtime_ms = ms_since(t0_);
    return r;
  }

 private:
  void record(double target, double computed, double ae, double re, double tol, bool failed) {
    const bool nan = std::isnan(re);
    const bool take = count_ == 0 || (failed && !failed_) ||
                      (failed == failed_ && (nan || re > r_.rel_err));
    ++count_;
    if (!take) return;
    failed_ = failed_ || failed;
    r_.target = target;
    r_.computed = computed;
    r_.abs_err = ae;
    r_.rel_err = re;
    r_.tolerance = tol;
  }

  std::string name_;
  double tol_;
  Clock::time_point t0_;
  VerificationReport r_;
  long count_ = 0;
  bool failed_ = false;
};

double pick_q(const SuiteOptions& o, double fallback) { return o.q ? *o.q : fallback; }

void require_q_below_one(const SuiteOptions& o, const char* suite) {
  if (o.q && *o.q == 1.0) throw InvalidArgument(std::string(suite) + " suite needs q < 1");
  if (o.q) QBase check(*o.q);
}

SchemeParams draw_real(Draws& d, double mag, double q) {
  return SchemeParams::real(d.uniform(-mag, mag), d.uniform(-mag, mag), d.uniform(-mag, mag),
                            d.uniform(-mag, mag), q);
}

SchemeParams draw_conjugate(Draws& d, double mag, double q) {
  const double y = d.uniform(-1.0, 1.0), r1 = d.uniform(-mag, mag);
  const double z = d.uniform(-1.0, 1.0), r2 = d.uniform(-mag, mag);
  return SchemeParams::conjugate(y, r1, z, r2, q);
}

std::vector<double> draw_grid(Draws& d, int n, double lo, double hi) {
  std::vector<double> g(n);
  for (auto& x : g) x = d.uniform(lo, hi);
  return g;
}

VerificationReport runtime_report(const std::string& name, double seconds, double limit) {
  VerificationReport r;
  r.name = name;
  r.target = 0.0;
  r.computed = seconds;
  r.abs_err = seconds;
  r.rel_err = seconds / limit;
  r.tolerance = limit;
  r.passed = seconds <= limit;
  r.runtime_ms = seconds * 1e3;
  return r;
}

std::vector<VerificationReport> suite_normalization(const SuiteOptions& o) {
  require_q_below_one(o, "normalization");
  const auto t0 = Clock::now();
  Draws d(o.seed, 1);
  std::vector<VerificationReport> out;
  for (int i = 0; i < 20; ++i) {
    const double q = pick_q(o, kQGrid[i % 5]);
    const SchemeParams p = i % 2 == 0 ? draw_real(d, 0.8, q) : draw_conjugate(d, 0.8, q);
    auto r = check_normalization(DensitySpec{DensityKind::f_AW, p, default_truncation()});
    r.name = "normalization.f_AW[" + std::to_string(i) + "]";
    out.push_back(r);
  }
  out.push_back(runtime_report("normalization.f_AW.runtime_s", ms_since(t0) / 1e3, 60.0));
  for (int i = 0; i < 3; ++i) {
    const double q = pick_q(o, kQGrid[(i + 2) % 5]);
    const double r = q < 1.0 ? support_radius(q) : 3.0;
    SchemeParams p;
    p.q = q;
    p.y = d.uniform(-0.9 * r, 0.9 * r);
    p.z = d.uniform(-0.9 * r, 0.9 * r);
    p.rho1 = d.uniform(-0.8, 0.8);
    p.rho2 = d.uniform(-0.8, 0.8);
    for (DensityKind k : {DensityKind::f_N, DensityKind::f_CN, DensityKind::f_C2N}) {
      auto rep = check_normalization(DensitySpec{k, p, default_truncation()});
      rep.name += "[" + std::to_string(i) + "]";
      out.push_back(rep);
    }
  }
  return out;
}

std::vector<VerificationReport> suite_orthogonality(const SuiteOptions& o) {
  require_q_below_one(o, "orthogonality");
  Draws d(o.seed, 2);
  std::vector<VerificationReport> out;
  struct Case {
    Family f;
    bool conjugate;
  };
  const Case cases[] = {{Family::AW, false}, {Family::AW, true},  {Family::C2H, false},
                        {Family::ASC, false}, {Family::ASC, true}, {Family::BQH, false},
                        {Family::QH, false}};
  for (const auto& c : cases) {
    const double q = pick_q(o, c.conjugate ? 0.7 : 0.5);
    const SchemeParams p = c.conjugate ? draw_conjugate(d, 0.8, q) : draw_real(d, 0.8, q);
    const std::string base = std::string("orthogonality.") + family_name(c.f) +
                             (c.conjugate ? ".conjugate" : ".real");
    Worst diag(base + ".diagonal", 1e-6), off(base + ".off_diagonal", 1e-8);
    for (const auto& r : check_orthogonality(c.f, 6, p)) {
      const bool is_diag = r.target != 0.0;
      (is_diag ? diag : off).offer_report(r);
    }
    out.push_back(diag.finish());
    out.push_back(off.finish());
  }
  return out;
}

std::vector<VerificationReport> suite_connection_round_trip(const SuiteOptions& o) {
  require_q_below_one(o, "connection_round_trip");
  Draws d(o.seed, 3);
  constexpr int kN = 10;
  constexpr double kTol = 1e-10;
  Worst c2h("round_trip.aw_c2h", kTol), asc("round_trip.aw_asc", kTol),
      asc_f("round_trip.aw_asc.factored", kTol), wp("round_trip.w_p", kTol),
      hp("round_trip.h_p", kTol), agree("aw_asc.printed_vs_factored", kTol);
  auto both = [](Worst& w, const ConnectionMatrix& f, const ConnectionMatrix& b) {
    w.offer(0.0, identity_defect(compose(f, b)), 1.0);
    w.offer(0.0, identity_defect(compose(b, f)), 1.0);
  };
  for (int i = 0; i < 10; ++i) {
    const double q = pick_q(o, kQGrid[i % 5]);
    const SchemeParams r = draw_real(d, 0.8, q);
    both(c2h, connection_aw_c2h(kN, r, Direction::forward),
         connection_aw_c2h(kN, r, Direction::backward));
    const auto pf = connection_aw_asc(kN, r, Direction::forward, AscVariant::printed);
    const auto pb = connection_aw_asc(kN, r, Direction::backward, AscVariant::printed);
    const auto ff = connection_aw_asc(kN, r, Direction::forward, AscVariant::factored);
    const auto fb = connection_aw_asc(kN, r, Direction::backward, AscVariant::factored);
    both(asc, pf, pb);
    both(asc_f, ff, fb);
    for (int n = 0; n <= kN; ++n) {
      double row = 0.0;
      for (int k = 0; k <= n; ++k) row = std::max(row, std::abs(pf.at(k, n)));
      for (int k = 0; k <= n; ++k) agree.offer(pf.at(k, n), ff.at(k, n), row);
    }
    const SchemeParams c = draw_conjugate(d, 0.8, q);
    both(wp, connection_w_p(kN, c, Direction::forward), connection_w_p(kN, c, Direction::backward));
    const double y = d.uniform(-1.0, 1.0), rho = d.uniform(-0.8, 0.8);
    both(hp, connection_h_p(kN, y, rho, q, Direction::forward),
         connection_h_p(kN, y, rho, q, Direction::backward));
  }
  return {c2h.finish(), asc.finish(), asc_f.finish(), agree.finish(), wp.finish(), hp.finish()};
}

std::vector<VerificationReport> suite_theorem_main(const SuiteOptions& o) {
  require_q_below_one(o, "theorem_main");
  Draws d(o.seed, 4);
  Worst wp("theorem_main.w_in_p", 1e-9), pw("theorem_main.p_in_w", 1e-9);
  for (int i = 0; i < 10; ++i) {
    const SchemeParams p = draw_conjugate(d, 0.8, pick_q(o, kQGrid[i % 5]));
    const auto grid = draw_grid(d, 100, -1.0, 1.0);
    wp.offer_report(check_expansion(ExpansionKind::theorem_main_wp, p, grid, 8));
    pw.offer_report(check_expansion(ExpansionKind::theorem_main_pw, p, grid, 8));
  }
  return {wp.finish(), pw.finish()};
}

std::vector<VerificationReport> suite_identities(const SuiteOptions& o) {
  require_q_below_one(o, "identities");
  Draws d(o.seed, 5);
  Worst c1("identities.corollary_i", 1e-11), c2("identities.corollary_ii", 1e-11),
      od("identities.odwr_iv", 1e-11), bc("identities.b_convolution", 1e-11);
  for (int i = 0; i < 200; ++i) {
    const double z = d.uniform(-1.0, 1.0), y = d.uniform(-1.0, 1.0), t = d.uniform(-0.8, 0.8);
    const double q = pick_q(o, d.uniform(-0.9, 0.95));
    for (int n = 1; n <= 8; ++n) {
      for (int k = 0; k < n; ++k) {
        const auto a = identity_residual(IdentityKind::corollary_i, n, k, z, y, t, q);
        c1.offer(0.0, a.value, a.max_term);
        const auto b = identity_residual(IdentityKind::corollary_ii, n, k, z, y, t, q);
        c2.offer(0.0, b.value, b.max_term);
      }
      const auto e = identity_residual(IdentityKind::odwr_iv, n, 0, z, y, t, q);
      od.offer(0.0, e.value, e.max_term);
      const auto f = identity_residual(IdentityKind::b_convolution, n, 0, z, y, t, q);
      bc.offer(0.0, f.value, f.max_term);
    }
  }
  return {c1.finish(), c2.finish(), od.finish(), bc.finish()};
}

std::vector<VerificationReport> suite_conversion(const SuiteOptions& o) {
  require_q_below_one(o, "conversion");
  Draws d(o.seed, 6);
  Worst diff("conversion.lhs_minus_rhs", 1e-10), imag("conversion.imaginary_part", 1e-10);
  for (int i = 0; i < 100; ++i) {
    const double theta = d.uniform(0.0, kPi), eta = d.uniform(0.0, kPi), t = d.uniform(-0.8, 0.8);
    const double q = pick_q(o, d.uniform(-0.9, 0.95));
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m) {
        const auto s = conversion_sides(n, m, theta, eta, t, q);
        diff.offer(s.rhs.real(), s.lhs.real(), 1.0);
        imag.offer(0.0, std::max(std::abs(s.lhs.imag()), std::abs(s.rhs.imag())), 1.0);
      }
  }
  return {diff.finish(), imag.finish()};
}

std::vector<VerificationReport> suite_kernels(const SuiteOptions& o) {
  require_q_below_one(o, "kernels");
  Draws d(o.seed, 7);
  std::vector<VerificationReport> out;
  const ExpansionKind kinds[] = {ExpansionKind::kernel_pm, ExpansionKind::kernel_aw_fwd,
                                 ExpansionKind::kernel_aw_inv, ExpansionKind::c2h_closed_form};
  for (auto k : kinds) {
    Worst w(std::string("kernels.") + expansion_name(k), 1e-8);
    for (int i = 0; i < 5; ++i) {
      const double q = pick_q(o, kQGrid[i]);
      const SchemeParams p =
          k == ExpansionKind::c2h_closed_form ? draw_real(d, 0.6, q) : draw_conjugate(d, 0.6, q);
      w.offer_report(check_expansion(k, p, draw_grid(d, 25, -0.999, 0.999), 8, default_truncation()));
    }
    out.push_back(w.finish());
  }
  return out;
}

std::vector<VerificationReport> suite_conditional_moments(const SuiteOptions& o) {
  require_q_below_one(o, "conditional_moments");
  Draws d(o.seed, 8);
  Worst m1("conditional_moments.calka1", 1e-7), m2("conditional_moments.calka2", 1e-7);
  for (int i = 0; i < 4; ++i) {
    const SchemeParams p = i == 0 ? SchemeParams::conjugate(0.3, 0.4, -0.2, 0.5, pick_q(o, 0.6))
                                  : draw_conjugate(d, 0.8, pick_q(o, kQGrid[(i + 1) % 5]));
    for (int n = 0; n <= 5; ++n) {
      m1.offer_report(check_conditional_moment(n, p, MomentKind::calka1, {}, default_truncation()));
      m2.offer_report(check_conditional_moment(n, p, MomentKind::calka2, {}, default_truncation()));
    }
  }
  return {m1.finish(), m2.finish()};
}

double cheb_u(int n, double x) {
  return n < 0 ? 0.0 : classical(Classical::ChebyshevU, n, x).real();
}

double hermite(int n, double x) { return classical(Classical::HermiteMonic, n, x).real(); }

std::vector<VerificationReport> suite_classical_limits(const SuiteOptions& o) {
  if (o.q) throw InvalidArgument("classical_limits suite fixes q itself");
  Draws d(o.seed, 9);
  constexpr double kTol = 1e-12;
  constexpr int kN = 8;
  Worst h0("classical.H.q0", kTol), h1("classical.H.q1", kTol), p0("classical.P.q0", kTol),
      p1("classical.P.q1", kTol), a0("classical.A.q0", kTol), a1("classical.A.q1", kTol),
      fn0("classical.f_N.q0", kTol), fn1("classical.f_N.q1", kTol), fc0("classical.f_CN.q0", kTol),
      fc1("classical.f_CN.q1", kTol), f20("classical.f_C2N.q0", kTol);
  for (int i = 0; i < 100; ++i) {
    const double r1 = d.uniform(-0.8, 0.8), r2 = d.uniform(-0.8, 0.8);
    {
      const double x = d.uniform(-2.0, 2.0), y = d.uniform(-2.0, 2.0), z = d.uniform(-2.0, 2.0);
      const RescaledArgs g{x, y, r1, z, r2, 0.0};
      const auto H = eval_rescaled_seq(Rescaled::H, kN, g).values;
      const auto P = eval_rescaled_seq(Rescaled::P, kN, g).values;
      const auto A = eval_rescaled_seq(Rescaled::A, kN, g).values;
      for (int n = 0; n <= kN; ++n) {
        const double u = cheb_u(n, x / 2);
        h0.offer(u, H[n], std::max(1.0, std::abs(u)));
        const double tp[] = {u, -r1 * y * cheb_u(n - 1, x / 2), r1 * r1 * cheb_u(n - 2, x / 2)};
        double sp = 0.0, mp = 1.0;
        for (double t : tp) sp += t, mp = std::max(mp, std::abs(t));
        p0.offer(sp, P[n], mp);
        if (n == 1 || n == 2) continue;
        const double ta[] = {u, -(r1 * y + r2 * z) * cheb_u(n - 1, x / 2),
                             (r1 * r1 + r2 * r2 + y * z * r1 * r2) * cheb_u(n - 2, x / 2),
                             -r1 * r2 * (r1 * z + r2 * y) * cheb_u(n - 3, x / 2),
                             r1 * r1 * r2 * r2 * cheb_u(n - 4, x / 2)};
        double sa = 0.0, ma = 1.0;
        for (double t : ta) sa += t, ma = std::max(ma, std::abs(t));
        a0.offer(sa, A[n], ma);
      }
      const double w = std::sqrt(4.0 - x * x) / (2.0 * kPi);
      fn0.offer(w, f_n_density(x, 0.0), std::max(w, 1.0));
      const double km = (1 - r1 * r1) * std::sqrt(4.0 - x * x) /
                        (2 * kPi * (r1 * r1 * (x * x + y * y) - r1 * x * y * (1 + r1 * r1) +
                                    (1 - r1 * r1) * (1 - r1 * r1)));
      fc0.offer(km, f_cn_density(x, y, r1, 0.0), std::max(km, 1.0));
      const double c2 = (1 - r1 * r1) * (1 - r2 * r2) * std::sqrt(4.0 - x * x) *
                        omega(z / 2, y / 2, r1 * r2) /
                        (2 * kPi * omega(x / 2, y / 2, r1) * omega(x / 2, z / 2, r2) *
                         (1 - r1 * r1 * r2 * r2));
      f20.offer(c2, f_c2n_density(x, y, r1, z, r2, 0.0), std::max(c2, 1.0));
    }
    {
      const double x = d.uniform(-3.0, 3.0), y = d.uniform(-3.0, 3.0), z = d.uniform(-3.0, 3.0);
      const RescaledArgs g{x, y, r1, z, r2, 1.0};
      const auto H = eval_rescaled_seq(Rescaled::H, kN, g).values;
      const auto P = eval_rescaled_seq(Rescaled::P, kN, g).values;
      const auto A = eval_rescaled_seq(Rescaled::A, kN, g).values;
      const double s1 = 1 - r1 * r1, s2 = 1 - r2 * r2, T = 1 - r1 * r1 * r2 * r2;
      const double ap = (x * T - r1 * s2 * y - r2 * s1 * z) / std::sqrt(s1 * s2 * T);
      for (int n = 0; n <= kN; ++n) {
        const double hx = hermite(n, x);
        h1.offer(hx, H[n], std::max(1.0, std::abs(hx)));
        const double px = hermite(n, (x - r1 * y) / std::sqrt(s1)) * std::pow(s1, n / 2.0);
        p1.offer(px, P[n], std::max(1.0, std::abs(px)));
        const double ax = std::pow(s1 * s2 / T, n / 2.0) * hermite(n, ap);
        a1.offer(ax, A[n], std::max(1.0, std::abs(ax)));
      }
      const double gn = std::exp(-x * x / 2) / std::sqrt(2 * kPi);
      fn1.offer(gn, f_n_density(x, 1.0), std::max(gn, 1.0));
      const double gc = std::exp(-(x - r1 * y) * (x - r1 * y) / (2 * s1)) / std::sqrt(2 * kPi * s1);
      fc1.offer(gc, f_cn_density(x, y, r1, 1.0), std::max(gc, 1.0));
    }
  }
  return {h0.finish(),  h1.finish(),  p0.finish(),  p1.finish(),  a0.finish(), a1.finish(),
          fn0.finish(), fn1.finish(), fc0.finish(), fc1.finish(), f20.finish()};
}

std::vector<VerificationReport> suite_ladder(const SuiteOptions& o) {
  require_q_below_one(o, "ladder");
  Draws d(o.seed, 10);
  Worst we("ladder.e_n", 1e-11), wf("ladder.f_n", 1e-11);
  for (int i = 0; i < 20; ++i) {
    const double q = pick_q(o, kQGrid[i % 5]);
    SchemeParams p = i % 2 == 0 ? draw_real(d, 0.8, q) : draw_conjugate(d, 0.8, q);
    if (std::abs(p.a) < 1e-3) p.a = 0.5;
    Complex prev_a = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const auto rc = aw_recurrence_coeffs(n, p.a, p.b, p.c, p.d, p.q);
      const auto lc = kls_ladder_coeffs(n, p);
      const Complex e = p.a + 1.0 / p.a - lc.A - lc.C;
      const double scale = std::max({std::abs(rc.e), std::abs(p.a) + std::abs(1.0 / p.a),
                                     std::abs(lc.A), std::abs(lc.C)});
      we.offer(0.0, std::abs(e - rc.e), scale);
      if (n > 0) {
        const Complex f = prev_a * lc.C;
        wf.offer(0.0, std::abs(f - rc.f), std::max(std::abs(rc.f), 1e-300));
      }
      prev_a = lc.A;
    }
  }
  return {we.finish(), wf.finish()};
}

std::vector<VerificationReport> suite_markov(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  ChainConfig cfg;
  cfg.q = pick_q(o, 0.6);
  cfg.rho1 = 0.4;
  cfg.rho2 = 0.5;
  cfg.n_samples = o.markov_samples;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  const auto samples = sample_chain(cfg);
  std::vector<VerificationReport> out;
  for (auto c : {Coordinate::y, Coordinate::x, Coordinate::z})
    out.push_back(marginal_ks_check(samples, c, cfg));
  out.push_back(correlation_check(samples, Coordinate::y, Coordinate::z, cfg));
  for (int n = 0; n <= 2; ++n) out.push_back(empirical_moment_check(samples, n, cfg));

  Worst ck("markov.chapman_kolmogorov", 1e-8);
  ck.offer(0.0, chapman_kolmogorov_residual(0.5, -0.3, 0.4, 0.6, 0.5), 1.0);
  ck.offer(0.0, chapman_kolmogorov_residual(0.5, -0.3, 0.4, 0.6, 0.0), 1.0);
  Draws d(o.seed, 11);
  for (int i = 0; i < 5; ++i) {
    const double q = kQGrid[i];
    const double r = support_radius(q);
    ck.offer(0.0,
             chapman_kolmogorov_residual(d.uniform(-0.9 * r, 0.9 * r), d.uniform(-0.9 * r, 0.9 * r),
                                         d.uniform(-0.8, 0.8), d.uniform(-0.8, 0.8), q),
             1.0);
  }
  out.push_back(ck.finish());

  Worst tr("markov.time_reversal", 1e-10);
  for (int i = 0; i < 100; ++i) {
    const double q = pick_q(o, kQGrid[i % 5]);
    const double r = q < 1.0 ? support_radius(q) : 4.0;
    const double x = d.uniform(-r, r), y = d.uniform(-r, r), t = d.uniform(-0.8, 0.8);
    const double lhs = f_n_density(y, q) * f_cn_density(x, y, t, q);
    const double rhs = f_n_density(x, q) * f_cn_density(y, x, t, q);
    tr.offer(rhs, lhs, std::max(std::abs(rhs), 1e-300));
  }
  out.push_back(tr.finish());
  out.push_back(runtime_report("markov.runtime_s", ms_since(t0) / 1e3, 120.0));
  return out;
}

std::vector<VerificationReport> suite_base_inversion(const SuiteOptions& o) {
  if (o.q) throw InvalidArgument("base_inversion suite fixes q itself");
  Draws d(o.seed, 12);
  constexpr double kTol = 1e-12;
  Worst inv("base_inversion.pochhammer_inverse", kTol), rev("base_inversion.pochhammer_reversal", kTol),
      bin("base_inversion.binomial", kTol);
  for (double q : {-0.7, -0.3, 0.3, 0.7}) {
    for (int i = 0; i < 10; ++i) {
      double a = d.uniform(-2.0, 2.0);
      if (std::abs(a) < 0.05) a = 0.5;
      for (int n = 0; n <= 12; ++n) {
        const double lhs = q_pochhammer(a, q, n);
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const double r1 =
            sign * qpow(q, binom2(n)) * std::pow(a, n) * q_pochhammer(1.0 / a, 1.0 / q, n);
        inv.offer(lhs, r1, std::abs(lhs));
        const double r2 = q_pochhammer(a * qpow(q, n - 1), 1.0 / q, n);
        rev.offer(lhs, r2, std::abs(lhs));
      }
    }
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) {
        const double l = q_binomial(n, k, 1.0 / q);
        const double r = q_binomial(n, k, q) * std::pow(q, k * (k - n));
        bin.offer(r, l, std::abs(r));
      }
  }
  return {inv.finish(), rev.finish(), bin.finish()};
}

using SuiteFn = std::vector<VerificationReport> (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m = {
      {"base_inversion", suite_base_inversion},
      {"classical_limits", suite_classical_limits},
      {"conditional_moments", suite_conditional_moments},
      {"connection_round_trip", suite_connection_round_trip},
      {"conversion", suite_conversion},
      {"identities", suite_identities},
      {"kernels", suite_kernels},
      {"ladder", suite_ladder},
      {"markov", suite_markov},
      {"normalization", suite_normalization},
      {"orthogonality", suite_orthogonality},
      {"theorem_main", suite_theorem_main},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + name + "'");
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = name;
  r.seed = opts.seed;
  r.reports = it->second(opts);
  r.passed = !r.reports.empty() &&
             std::all_of(r.reports.begin(), r.reports.end(), [](const auto& x) { return x.passed; });
  r.runtime_ms = ms_since(t0);
  return r;
}

}  // namespace qaw
