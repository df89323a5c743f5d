#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/markov.hpp"

using namespace qaw;

TEST_CASE("counter uniforms are reproducible and in range") {
  for (std::uint64_t c = 0; c < 1000; ++c) {
    const double u = counter_uniform(42, c);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    CHECK(u == counter_uniform(42, c));
  }
  CHECK(counter_uniform(1, 0) != counter_uniform(2, 0));
}

TEST_CASE("time reversal of the transition density") {
  for (double q : {-0.5, 0.0, 0.6, 1.0})
    for (double t : {-0.6, 0.3, 0.8}) {
      const double r = q == 1.0 ? 3.0 : 0.9 * support_radius(q);
      for (double x : {-0.7 * r, 0.2 * r})
        for (double y : {-0.4 * r, 0.6 * r}) {
          const double lhs = f_n_density(y, q) * f_cn_density(x, y, t, q);
          const double rhs = f_n_density(x, q) * f_cn_density(y, x, t, q);
          CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(lhs, 1e-300));
        }
    }
}

TEST_CASE("inverse cdf tables invert their cdf") {
  SchemeParams p;
  p.q = 0.5;
  p.y = 0.4;
  p.rho1 = 0.6;
  const auto t = build_inverse_cdf({DensityKind::f_CN, p, {}});
  CHECK(t.cdf_values().front() == 0.0);
  CHECK(t.cdf_values().back() == 1.0);
  for (double u : {0.001, 0.2, 0.5, 0.93}) CHECK(std::abs(t.cdf(t.quantile(u)) - u) <= 1e-9);
  p.q = 1.0;
  CHECK_THROWS_AS(build_inverse_cdf({DensityKind::f_N, p, {}}), InvalidArgument);
}

TEST_CASE("sampling is deterministic and thread-independent") {
  ChainConfig cfg;
  cfg.q = 0.3;
  cfg.rho1 = 0.4;
  cfg.rho2 = -0.5;
  cfg.n_samples = 2000;
  cfg.seed = 7;
  cfg.threads = 1;
  const auto a = sample_chain(cfg);
  cfg.threads = 3;
  const auto b = sample_chain(cfg);
  REQUIRE(a.size() == 2000);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].y == b[i].y);
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].z == b[i].z);
  }
  const double r = support_radius(0.3);
  for (const auto& s : a) CHECK((std::abs(s.y) <= r && std::abs(s.x) <= r && std::abs(s.z) <= r));
}

TEST_CASE("marginals and correlations of a moderate sample") {
  ChainConfig cfg;
  cfg.q = 0.6;
  cfg.rho1 = 0.4;
  cfg.rho2 = 0.5;
  cfg.n_samples = 100000;
  cfg.seed = 20240611;
  const auto s = sample_chain(cfg);
  for (auto c : {Coordinate::y, Coordinate::x, Coordinate::z}) CHECK(marginal_ks_check(s, c, cfg).passed);
  CHECK(correlation_check(s, Coordinate::y, Coordinate::z, cfg).passed);
  CHECK(correlation_check(s, Coordinate::y, Coordinate::x, cfg).passed);
  CHECK(empirical_moment_check(s, 1, cfg).passed);
}

TEST_CASE("Gaussian chain at q = 1") {
  ChainConfig cfg;
  cfg.q = 1.0;
  cfg.rho1 = 0.7;
  cfg.rho2 = 0.2;
  cfg.n_samples = 50000;
  cfg.seed = 3;
  const auto s = sample_chain(cfg);
  CHECK(marginal_ks_check(s, Coordinate::z, cfg).passed);
  CHECK(correlation_check(s, Coordinate::y, Coordinate::x, cfg).passed);
}

TEST_CASE("Chapman-Kolmogorov consistency") {
  for (double q : {0.0, 0.5})
    CHECK(chapman_kolmogorov_residual(0.3, -0.8, 0.5, 0.6, q) <= 1e-8);
}

TEST_CASE("csv output") {
  std::ostringstream os;
  write_csv(os, {{0.5, -0.25, 1.0}});
  CHECK(os.str() == "y,x,z\n0.5,-0.25,1\n");
}
