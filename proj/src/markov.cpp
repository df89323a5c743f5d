#include "qaw/markov.hpp"

#include <math.h>  // pchip.hpp in Boost 1.74 calls unqualified isnan

#include <algorithm>
#include <boost/math/interpolators/pchip.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <thread>

#include "qaw/errors.hpp"
#include "qaw/families.hpp"

namespace qaw {

struct InverseCdfTable::Interp {
  boost::math::interpolators::pchip<std::vector<double>> quantile;
  boost::math::interpolators::pchip<std::vector<double>> cdf;
};

InverseCdfTable::InverseCdfTable(std::vector<double> x, std::vector<double> cdf, DensitySpec spec)
    : x_(std::move(x)), cdf_(std::move(cdf)), spec_(std::move(spec)) {
  if (x_.size() != cdf_.size() || x_.size() < 4)
    throw InvalidArgument("inverse CDF table needs at least 4 matching knots");
  for (size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1]) || !(cdf_[i] > cdf_[i - 1]))
      throw InvalidArgument("inverse CDF table knots must be strictly increasing");
  auto xs = x_, cs = cdf_;
  auto xs2 = x_, cs2 = cdf_;
  interp_ = std::make_shared<const Interp>(
      Interp{boost::math::interpolators::pchip<std::vector<double>>(std::move(cs), std::move(xs)),
             boost::math::interpolators::pchip<std::vector<double>>(std::move(xs2), std::move(cs2))});
}

double InverseCdfTable::quantile(double u) const {
  return interp_->quantile(std::clamp(u, cdf_.front(), cdf_.back()));
}

double InverseCdfTable::cdf(double x) const {
  if (x <= x_.front()) return 0.0;
  if (x >= x_.back()) return 1.0;
  return std::clamp(interp_->cdf(x), 0.0, 1.0);
}

namespace {

double rescaled_pdf(const DensitySpec& spec, double x) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case DensityKind::f_N: return f_n_density(x, p.q, spec.trunc);
    case DensityKind::f_CN: return f_cn_density(x, p.y, p.rho1, p.q, spec.trunc);
    default: throw InvalidArgument("inverse CDF tables support f_N and f_CN only");
  }
}

constexpr double kPi = 3.14159265358979323846;

int worker_count(int requested) {
  if (requested > 0) return requested;
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

template <class F>
void parallel_for(std::uint64_t n, int threads, F&& body) {
  const int w = static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), std::max<std::uint64_t>(n, 1)));
  if (w <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(w);
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      try {
        const std::uint64_t lo = n * t / w, hi = n * (t + 1) / w;
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

DensitySpec rescaled_spec(DensityKind kind, double y, double rho, double q) {
  DensitySpec s;
  s.kind = kind;
  s.params.y = y;
  s.params.rho1 = rho;
  s.params.q = q;
  s.trunc = default_truncation();
  return s;
}

// Quantile tables of f_CN(.|c, rho) on equispaced nodes c_k of S(q).
struct ConditionalTables {
  double lo = 0.0, step = 0.0;
  std::vector<InverseCdfTable> tables;

  double sample(double c, double u) const {
    const int last = static_cast<int>(tables.size()) - 1;
    double t = (c - lo) / step;
    t = std::clamp(t, 0.0, static_cast<double>(last));
    int k = std::min(static_cast<int>(t), last - 1);
    const double lam = t - k;
    return (1.0 - lam) * tables[k].quantile(u) + lam * tables[k + 1].quantile(u);
  }
};

ConditionalTables build_conditional(double rho, double q, const ChainConfig& cfg, int threads) {
  const int m = cfg.conditioning_points;
  if (m < 2) throw InvalidArgument("conditioning_points must be at least 2");
  const double r = support_radius(q);
  ConditionalTables ct;
  ct.lo = -r;
  ct.step = 2.0 * r / (m - 1);
  std::vector<std::unique_ptr<InverseCdfTable>> tmp(m);
  parallel_for(m, threads, [&](std::uint64_t k) {
    const double c = k + 1 == static_cast<std::uint64_t>(m) ? r : -r + ct.step * k;
    tmp[k] = std::make_unique<InverseCdfTable>(
        build_inverse_cdf(rescaled_spec(DensityKind::f_CN, c, rho, q), cfg.table_points));
  });
  for (auto& t : tmp) ct.tables.push_back(std::move(*t));
  return ct;
}

void validate(const ChainConfig& cfg) {
  if (!(std::abs(cfg.rho1) < 1.0) || !(std::abs(cfg.rho2) < 1.0))
    throw InvalidArgument("chain requires |rho1| < 1 and |rho2| < 1");
}

double coord(const ChainSample& s, Coordinate c) {
  switch (c) {
    case Coordinate::y: return s.y;
    case Coordinate::x: return s.x;
    case Coordinate::z: return s.z;
  }
  return 0.0;
}

const char* coord_name(Coordinate c) {
  switch (c) {
    case Coordinate::y: return "Y";
    case Coordinate::x: return "X";
    case Coordinate::z: return "Z";
  }
  return "?";
}

struct Moments {
  double n = 0.0, mean = 0.0, m2 = 0.0;
  void add(double v) {
    n += 1.0;
    const double d = v - mean;
    mean += d / n;
    m2 += d * (v - mean);
  }
  double se() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

double zscore(const Moments& m) {
  const double se = m.se();
  if (se == 0.0) return m.mean == 0.0 ? 0.0 : INFINITY;
  return std::abs(m.mean) / se;
}

std::vector<double> quantile_cuts(std::vector<double> v, int bins) {
  std::vector<double> cuts;
  for (int b = 1; b < bins; ++b) {
    const size_t k = v.size() * b / bins;
    std::nth_element(v.begin(), v.begin() + k, v.end());
    cuts.push_back(v[k]);
  }
  return cuts;
}

int bin_of(const std::vector<double>& cuts, double v) {
  return static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
}

VerificationReport report(std::string name, double target, double computed, double tol,
                          double ms) {
  VerificationReport r;
  r.name = std::move(name);
  r.target = target;
  r.computed = computed;
  r.abs_err = std::abs(computed - target);
  r.rel_err = r.abs_err;
  r.tolerance = tol;
  r.passed = r.abs_err <= tol;
  r.runtime_ms = ms;
  return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

InverseCdfTable build_inverse_cdf(const DensitySpec& spec, int grid_points) {
  const double q = spec.params.q;
  if (q == 1.0) throw InvalidArgument("inverse CDF tables are built for q < 1 only");
  if (grid_points < 4) throw InvalidArgument("grid_points must be at least 4");
  const double r = support_radius(q);
  const auto& gl = gauss_legendre(4);
  const int cells = grid_points - 1;
  const double dth = kPi / cells;
  std::vector<double> xs(grid_points), mass(cells);
  for (int i = 0; i < grid_points; ++i) xs[i] = -r * std::cos(dth * i);
  xs.front() = -r;
  xs.back() = r;
  for (int i = 0; i < cells; ++i) {
    const double mid = dth * (i + 0.5), half = 0.5 * dth;
    double s = 0.0;
    for (size_t j = 0; j < gl.x.size(); ++j) {
      const double th = mid + half * gl.x[j];
      s += gl.w[j] * rescaled_pdf(spec, -r * std::cos(th)) * r * std::sin(th);
    }
    mass[i] = s * half;
    if (mass[i] < -1e-12) throw DegenerateDenominator("negative density mass in CDF table");
    mass[i] = std::max(mass[i], 0.0);
  }
  double total = 0.0;
  for (double m : mass) total += m;
  if (!(total > 0.0)) throw DegenerateDenominator("density integrates to zero");
  std::vector<double> kx{xs[0]}, kc{0.0};
  double acc = 0.0;
  for (int i = 0; i < cells; ++i) {
    acc += mass[i];
    const double c = i + 1 == cells ? 1.0 : std::min(acc / total, 1.0);
    if (c > kc.back()) {
      kx.push_back(xs[i + 1]);
      kc.push_back(c);
    }
  }
  if (kc.back() < 1.0) {
    kx.back() = r;
    kc.back() = 1.0;
  }
  return InverseCdfTable(std::move(kx), std::move(kc), spec);
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t key = splitmix_mix(seed + kGolden);
  const std::uint64_t v = splitmix_mix(key + kGolden * (counter + 1));
  return (static_cast<double>(v >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<ChainSample> sample_chain(const ChainConfig& cfg) {
  validate(cfg);
  const double q = cfg.q;
  const int threads = worker_count(cfg.threads);
  std::vector<ChainSample> out(cfg.n_samples);
  if (cfg.q.is_one()) {
    const double s1 = std::sqrt(1.0 - cfg.rho1 * cfg.rho1), s2 = std::sqrt(1.0 - cfg.rho2 * cfg.rho2);
    parallel_for(cfg.n_samples, threads, [&](std::uint64_t i) {
      double g[3];
      for (int k = 0; k < 3; ++k) {
        const double u1 = counter_uniform(cfg.seed, 6 * i + 2 * k);
        const double u2 = counter_uniform(cfg.seed, 6 * i + 2 * k + 1);
        g[k] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
      }
      auto& s = out[i];
      s.y = g[0];
      s.x = cfg.rho1 * s.y + s1 * g[1];
      s.z = cfg.rho2 * s.x + s2 * g[2];
    });
    return out;
  }
  const auto marginal = build_inverse_cdf(rescaled_spec(DensityKind::f_N, 0.0, 0.0, q), cfg.table_points);
  const auto step1 = build_conditional(cfg.rho1, q, cfg, threads);
  const auto step2 = build_conditional(cfg.rho2, q, cfg, threads);
  parallel_for(cfg.n_samples, threads, [&](std::uint64_t i) {
    auto& s = out[i];
    s.y = marginal.quantile(counter_uniform(cfg.seed, 3 * i));
    s.x = step1.sample(s.y, counter_uniform(cfg.seed, 3 * i + 1));
    s.z = step2.sample(s.x, counter_uniform(cfg.seed, 3 * i + 2));
  });
  return out;
}

VerificationReport empirical_moment_check(const std::vector<ChainSample>& samples, int n,
                                          const ChainConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 0 || n > 6) throw InvalidArgument("moment degree must be in [0, 6]");
  const std::string name = "markov.moment[n=" + std::to_string(n) + "]";
  if (n == 0) return report(name, 0.0, 0.0, 4.0, elapsed_ms(t0));
  constexpr int kBins = 8;
  constexpr double kMinOccupancy = 32;
  const double q = cfg.q, r1 = cfg.rho1, r2 = cfg.rho2;
  const double coef = std::pow(r2, n) * q_pochhammer(r1 * r1, q, n) /
                      q_pochhammer(r1 * r1 * r2 * r2, q, n);
  std::vector<double> ys, zs;
  ys.reserve(samples.size());
  zs.reserve(samples.size());
  for (const auto& s : samples) {
    ys.push_back(s.y);
    zs.push_back(s.z);
  }
  const auto ycut = quantile_cuts(ys, kBins), zcut = quantile_cuts(zs, kBins);
  Moments pooled_a, pooled_p;
  std::vector<Moments> cell_a(kBins * kBins), cell_p(kBins * kBins);
  for (const auto& s : samples) {
    RescaledArgs g{s.x, s.y, r1, s.z, r2, q};
    const double ra = eval_rescaled(Rescaled::A, n, g);
    const double rp = eval_rescaled(Rescaled::P, n, g) -
                      coef * eval_rescaled(Rescaled::P, n, RescaledArgs{s.z, s.y, r1 * r2, 0.0, 0.0, q});
    const int c = bin_of(ycut, s.y) * kBins + bin_of(zcut, s.z);
    pooled_a.add(ra);
    pooled_p.add(rp);
    cell_a[c].add(ra);
    cell_p[c].add(rp);
  }
  double worst = std::max(zscore(pooled_a), zscore(pooled_p));
  for (int c = 0; c < kBins * kBins; ++c) {
    if (cell_a[c].n < kMinOccupancy)
      throw InvalidArgument("moment check: a (Y, Z) bin has fewer than 32 samples");
    worst = std::max({worst, zscore(cell_a[c]), zscore(cell_p[c])});
  }
  return report(name, 0.0, worst, 4.0, elapsed_ms(t0));
}

VerificationReport marginal_ks_check(const std::vector<ChainSample>& samples, Coordinate c,
                                     const ChainConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (samples.empty()) throw InvalidArgument("KS check needs samples");
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(coord(s, c));
  std::sort(v.begin(), v.end());
  std::function<double(double)> F;
  std::unique_ptr<InverseCdfTable> table;
  if (cfg.q.is_one()) {
    F = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  } else {
    table = std::make_unique<InverseCdfTable>(
        build_inverse_cdf(rescaled_spec(DensityKind::f_N, 0.0, 0.0, cfg.q), cfg.table_points));
    F = [&](double x) { return table->cdf(x); };
  }
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const double f = F(v[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return report(std::string("markov.ks.") + coord_name(c), 0.0, std::sqrt(n) * d, 2.28,
                elapsed_ms(t0));
}

VerificationReport correlation_check(const std::vector<ChainSample>& samples, Coordinate a,
                                     Coordinate b, const ChainConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (a == b) throw InvalidArgument("correlation needs two distinct coordinates");
  if (samples.size() < 2) throw InvalidArgument("correlation needs at least two samples");
  auto lag = [](Coordinate c) { return c == Coordinate::y ? 0 : c == Coordinate::x ? 1 : 2; };
  const int la = lag(a), lb = lag(b);
  const double exact = std::abs(la - lb) == 2 ? cfg.rho1 * cfg.rho2
                       : std::min(la, lb) == 0 ? cfg.rho1
                                               : cfg.rho2;
  const double n = static_cast<double>(samples.size());
  double ma = 0.0, mb = 0.0;
  for (const auto& s : samples) {
    ma += coord(s, a);
    mb += coord(s, b);
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (const auto& s : samples) {
    const double da = coord(s, a) - ma, db = coord(s, b) - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  const double r = sab / std::sqrt(saa * sbb);
  const double se = (1.0 - exact * exact) / std::sqrt(n);
  auto rep = report(std::string("markov.corr.") + coord_name(a) + coord_name(b), exact, r, 4.0 * se,
                    elapsed_ms(t0));
  rep.rel_err = rep.abs_err / se;
  return rep;
}

double chapman_kolmogorov_residual(double x, double z, double rho1, double rho2, QBase q,
                                   const QuadratureRule& rule, const TruncationConfig& trunc) {
  if (!(std::abs(rho1) < 1.0) || !(std::abs(rho2) < 1.0))
    throw InvalidArgument("Chapman-Kolmogorov requires |rho| < 1");
  double lo, hi;
  QuadratureRule r = rule;
  if (q.is_one()) {
    lo = rho2 * z - 14.0;
    hi = rho2 * z + 14.0;
    r.kind = QuadratureRule::Kind::gauss_legendre;
  } else {
    hi = support_radius(q);
    lo = -hi;
  }
  const auto res = integrate(
      [&](double y) {
        return f_cn_density(x, y, rho1, q, trunc) * f_cn_density(y, z, rho2, q, trunc);
      },
      lo, hi, r);
  if (!res.converged) throw ConvergenceFailure("Chapman-Kolmogorov quadrature did not converge");
  return std::abs(res.value - f_cn_density(x, z, rho1 * rho2, q, trunc));
}

void write_csv(std::ostream& os, const std::vector<ChainSample>& samples) {
  os << "y,x,z\n";
  char line[96];
  for (const auto& s : samples) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.y, s.x, s.z);
    os << line;
  }
}

}  // namespace qaw
