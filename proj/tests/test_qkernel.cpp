#include <doctest.h>

#include <cmath>

#include "qaw/errors.hpp"
#include "qaw/qkernel.hpp"

using namespace qaw;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("infinite pochhammer reference values") {
  CHECK(rel(q_pochhammer_inf(0.5, QBase(0.5)), 0.28878809508660242) < 1e-14);
  CHECK(rel(q_pochhammer_inf(0.3, QBase(-0.6)), 0.76478507811817540) < 1e-14);
  CHECK(q_pochhammer_inf(0.3, QBase(0.0)) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("finite pochhammer and q-numbers") {
  CHECK(q_pochhammer(0.5, 0.5, 0) == 1.0);
  CHECK(q_pochhammer(0.5, 0.5, 2) == doctest::Approx(0.5 * 0.75).epsilon(1e-15));
  CHECK(q_number(3, 0.5) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(q_number(4, 1.0) == 4.0);
  CHECK(q_binomial(4, 2, 1.0) == 6.0);
  CHECK(q_binomial(4, 2, 0.0) == 1.0);
  CHECK(q_binomial(3, 1, 0.5) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(binom2(5) == 10);
}

TEST_CASE("base inversion of the pochhammer symbol") {
  for (double q : {-0.7, -0.3, 0.3, 0.7})
    for (double a : {-0.9, -0.4, 0.25, 0.8})
      for (int n = 0; n <= 12; ++n) {
        const double lhs = q_pochhammer(a, q, n);
        const double inv = std::pow(-1.0, n) * qpow(q, binom2(n)) * std::pow(a, n) *
                           q_pochhammer(1.0 / a, 1.0 / q, n);
        const double rev = q_pochhammer(a * qpow(q, n - 1), 1.0 / q, n);
        CHECK(rel(inv, lhs) <= 1e-12);
        CHECK(rel(rev, lhs) <= 1e-12);
      }
}

TEST_CASE("binomial under q -> 1/q") {
  for (double q : {-0.7, -0.3, 0.3, 0.7})
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) {
        const double lhs = q_binomial(n, k, 1.0 / q);
        const double rhs = q_binomial(n, k, q) * std::pow(q, k * (k - n));
        CHECK(rel(lhs, rhs) <= 1e-12);
        CHECK(q_binomial(n, k, q) == q_binomial(n, n - k, q));
      }
}

TEST_CASE("(q;q)_n equals (1-q)^n [n]_q!") {
  for (double q : {-0.9, -0.5, 0.0, 0.4, 0.95})
    for (int n = 0; n <= 20; ++n)
      CHECK(rel(q_pochhammer(q, q, n), std::pow(1.0 - q, n) * q_factorial(n, q)) <= 1e-12);
}

TEST_CASE("complex pochhammer reduces to the real one on the axis") {
  const Complex v = q_pochhammer(Complex(0.3, 0.0), 0.6, 7);
  CHECK(v.real() == doctest::Approx(q_pochhammer(0.3, 0.6, 7)).epsilon(1e-14));
  CHECK(std::abs(v.imag()) < 1e-16);
}

TEST_CASE("base validation") {
  CHECK_THROWS_AS(QBase(1.5), InvalidArgument);
  CHECK_THROWS_AS(QBase(-1.0), InvalidArgument);
  CHECK_NOTHROW(QBase(1.0));
}
