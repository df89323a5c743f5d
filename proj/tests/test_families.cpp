#include <doctest.h>

#include <cmath>
#include <random>

#include "qaw/errors.hpp"
#include "qaw/families.hpp"

using namespace qaw;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("reference values") {
  CHECK(eval_h(5, 0.3, 0.45) == doctest::Approx(0.458515546875).epsilon(1e-14));
  CHECK(eval_p(3, 0.4, 0.2, 0.5, 0.7) == doctest::Approx(-0.132408).epsilon(1e-13));
  // 4x^2 - (1 - q) at x = 0.5, q = 0.3
  CHECK(eval_scheme(Family::QH, 2, 0.5, SchemeParams::real(0, 0, 0, 0, 0.3)) ==
        doctest::Approx(0.3).epsilon(1e-15));
  CHECK(eval_h(0, 0.7, 0.2) == 1.0);
  CHECK(eval_h(1, 0.7, 0.2) == doctest::Approx(1.4));
}

TEST_CASE("family names round trip") {
  for (auto f : {Family::AW, Family::C2H, Family::ASC, Family::BQH, Family::QH})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("jacobi"), InvalidArgument);
}

TEST_CASE("ASC with a conjugate pair matches the p recurrence") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const double y = u(rng), rho = 0.9 * u(rng), x = u(rng), q = 0.95 * u(rng);
    const auto p = SchemeParams::conjugate(0.1, 0.2, y, rho, q);
    const auto s = eval_scheme_seq(Family::ASC, 10, x, p).values;
    const auto r = eval_p_seq(10, x, y, rho, q).values;
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(s[n] - r[n]) <= 1e-11 * std::max(1.0, std::abs(r[n])));
  }
}

TEST_CASE("g is p at the inverted base") {
  for (double q : {-0.7, -0.3, 0.3, 0.7})
    for (int n = 0; n <= 8; ++n) {
      const double x = 0.35, y = -0.6, rho = 0.45;
      const double lhs = eval_g(n, x, y, rho, q);
      const double rhs = std::pow(-1.0, n) * qpow(q, binom2(n)) * eval_p(n, x, y, rho, 1.0 / q);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("ladder coefficients reproduce the recurrence") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int t = 0; t < 30; ++t) {
    double a = u(rng);
    if (std::abs(a) < 0.05) a = 0.3;
    const auto p = SchemeParams::real(a, u(rng), u(rng), u(rng), 0.9 * u(rng));
    for (int n = 1; n <= 10; ++n) {
      const auto rc = aw_recurrence_coeffs(n, p);
      const auto l = kls_ladder_coeffs(n, p);
      const auto lm = kls_ladder_coeffs(n - 1, p);
      const double e = (p.a + 1.0 / p.a - l.A - l.C).real();
      const double f = (lm.A * l.C).real();
      CHECK(std::abs(e - rc.e) <= 1e-11 * std::max(1.0, std::abs(rc.e)));
      CHECK(std::abs(f - rc.f) <= 1e-11 * std::max(1.0, std::abs(rc.f)));
    }
  }
}

TEST_CASE("q = 0 reduces h to Chebyshev U") {
  for (int n = 0; n <= 10; ++n)
    for (double x : {-0.9, -0.2, 0.4, 0.99})
      CHECK(eval_h(n, x, 0.0) == doctest::Approx(classical(Classical::ChebyshevU, n, x).real()).epsilon(1e-12));
}

TEST_CASE("rescaled families are monic") {
  // n-th forward difference over integer nodes divided by n!
  const RescaledArgs base{0.0, 0.4, 0.3, -0.5, 0.6, 0.5};
  for (auto kind : {Rescaled::H, Rescaled::P, Rescaled::A})
    for (int n = 1; n <= 6; ++n) {
      double diff = 0.0, binom = 1.0;
      for (int k = 0; k <= n; ++k) {
        RescaledArgs a = base;
        a.x = k;
        diff += ((n - k) % 2 == 0 ? 1.0 : -1.0) * binom * eval_rescaled(kind, n, a);
        binom = binom * (n - k) / (k + 1);
      }
      CHECK(diff / std::tgamma(n + 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("rescaled H at q = 1 is the monic Hermite polynomial") {
  for (int n = 0; n <= 10; ++n)
    for (double x : {-2.5, -0.3, 1.1, 3.0})
      CHECK(eval_rescaled(Rescaled::H, n, {x, 0, 0, 0, 0, 1.0}) ==
            doctest::Approx(classical(Classical::HermiteMonic, n, x).real()).epsilon(1e-12));
}

TEST_CASE("sequence and single evaluation agree") {
  const auto p = SchemeParams::real(0.3, -0.2, 0.5, 0.1, 0.6);
  const auto s = eval_scheme_seq(Family::AW, 7, 0.25, p);
  CHECK(s.n_max() == 7);
  for (int n = 0; n <= 7; ++n) CHECK(s.values[n] == eval_scheme(Family::AW, n, 0.25, p));
}

TEST_CASE("invalid requests throw") {
  CHECK_THROWS_AS(eval_h(-1, 0.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(SchemeParams::conjugate(1.5, 0.3, 0.0, 0.3, 0.5), InvalidArgument);
  CHECK_THROWS_AS(SchemeParams::real(0.1, 0.2, 0.3, 0.4, 1.2), InvalidArgument);
}
