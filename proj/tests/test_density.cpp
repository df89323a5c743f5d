#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

TEST_CASE("reference values") {
  CHECK(f_h_density(0.3, 0.5) == doctest::Approx(0.79950361603864106).epsilon(1e-14));
  // q = 0 gives the semicircle law
  CHECK(f_h_density(0.6, 0.0) == doctest::Approx(2.0 * 0.8 / M_PI).epsilon(1e-14));
  CHECK(f_n_density(0.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
  CHECK(f_h_density(1.2, 0.5) == 0.0);
}

TEST_CASE("density names round trip") {
  for (auto k : {DensityKind::f_h, DensityKind::f_AW, DensityKind::f_psi, DensityKind::f_Q, DensityKind::f_bH,
                 DensityKind::f_p, DensityKind::f_W, DensityKind::f_N, DensityKind::f_CN, DensityKind::f_C2N})
    CHECK(parse_density(density_name(k)) == k);
  CHECK_THROWS_AS(parse_density("f_x"), InvalidArgument);
}

TEST_CASE("densities are nonnegative") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const double q = 0.95 * u(rng), x = u(rng);
    const auto p = SchemeParams::conjugate(u(rng), 0.8 * u(rng), u(rng), 0.8 * u(rng), q);
    for (auto k : {DensityKind::f_h, DensityKind::f_AW, DensityKind::f_p, DensityKind::f_W})
      CHECK(density_scheme(k, x, p) >= 0.0);
    const double r = support_radius(q);
    CHECK(f_c2n_density(r * x, 0.5 * r * u(rng), 0.8 * u(rng), 0.5 * r * u(rng), 0.8 * u(rng), q) >= 0.0);
  }
}

TEST_CASE("densities integrate to one") {
  const auto conj = SchemeParams::conjugate(0.3, 0.6, -0.4, 0.5, 0.7);
  const auto real = SchemeParams::real(0.5, -0.4, 0.3, 0.6, -0.5);
  for (auto k : {DensityKind::f_h, DensityKind::f_AW, DensityKind::f_psi, DensityKind::f_Q, DensityKind::f_bH})
    CHECK(check_normalization({k, real, {}}).passed);
  for (auto k : {DensityKind::f_p, DensityKind::f_W}) CHECK(check_normalization({k, conj, {}}).passed);
  SchemeParams r;
  r.y = 0.4;
  r.rho1 = 0.5;
  r.z = -0.3;
  r.rho2 = 0.6;
  for (double q : {0.0, 0.5, 1.0}) {
    r.q = q;
    for (auto k : {DensityKind::f_N, DensityKind::f_CN, DensityKind::f_C2N})
      CHECK(check_normalization({k, r, {}}).passed);
  }
}

TEST_CASE("factor-by-factor and fused AW weights agree") {
  for (double q : {-0.5, 0.0, 0.6, 0.95}) {
    const auto p = SchemeParams::real(0.5, -0.4, 0.3, 0.6, q);
    for (double x : {-0.9, -0.3, 0.2, 0.85}) {
      const double fused = density_scheme(DensityKind::f_AW, x, p);
      CHECK(std::abs(density_aw_factored(x, p) - fused) <= 1e-12 * fused);
    }
  }
}

TEST_CASE("rescaled densities are affine images of the scheme densities") {
  const double q = 0.4, s = std::sqrt(1.0 - q) / 2.0;
  const double y = 0.7, z = -0.5, r1 = 0.5, r2 = 0.6;
  for (double x : {-2.0, -0.4, 0.9, 2.2}) {
    const double direct = f_c2n_density(x, y, r1, z, r2, q);
    const double via = s * f_w_density(s * x, s * y, r1, s * z, r2, q);
    CHECK(std::abs(direct - via) <= 1e-9 * via);
    CHECK(f_cn_density(x, y, r1, q) == doctest::Approx(s * f_p_density(s * x, s * y, r1, q)).epsilon(1e-12));
  }
}

TEST_CASE("kernel sums converge to the density ratios") {
  const auto p = SchemeParams::conjugate(0.3, 0.6, -0.4, 0.5, 0.7);
  for (auto k : {KernelKind::poisson_mehler, KernelKind::aw_forward, KernelKind::aw_inverse})
    for (double x : {-0.8, 0.0, 0.55}) {
      const auto r = kernel_sum(k, x, p);
      CHECK(r.converged);
      CHECK(std::abs(r.value - kernel_target(k, x, p)) <= 1e-8 * std::max(std::abs(r.value), r.max_term));
    }
  const auto real = SchemeParams::real(0.5, -0.4, 0.3, 0.6, 0.3);
  const auto c2h = kernel_sum(KernelKind::c2h_sum, 0.25, real);
  REQUIRE(c2h.closed_form);
  CHECK(c2h.value == doctest::Approx(*c2h.closed_form).epsilon(1e-10));
}

TEST_CASE("norms at degree zero are one") {
  const auto p = SchemeParams::real(0.5, -0.4, 0.3, 0.6, 0.3);
  for (auto f : {Family::AW, Family::C2H, Family::ASC, Family::BQH, Family::QH})
    CHECK(norm_squared(f, 0, p) == doctest::Approx(1.0));
}

TEST_CASE("truncation tolerance comes from the environment") {
  ::setenv("QAW_DEFAULT_TOL", "1e-10", 1);
  CHECK(default_truncation().product_tol == 1e-10);
  ::unsetenv("QAW_DEFAULT_TOL");
  CHECK(default_truncation().product_tol == TruncationConfig{}.product_tol);
}
