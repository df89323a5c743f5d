#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "qaw/density.hpp"
#include "qaw/families.hpp"
#include "qaw/quadrature.hpp"
#include "qaw/suites.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

namespace {

// Coefficient of a^j b^k c^n d^m in
//   (abcd)_inf / ((ab)_inf (ac)_inf (ad)_inf (bc)_inf (bd)_inf (cd)_inf),
// times (q)_j (q)_k (q)_n (q)_m.
double product_moment(int j, int k, int n, int m, double q) {
  double sum = 0.0;
  const int top = (j + k + n + m) / 2;
  for (int s = 0; s <= std::min({j, k, n, m}); ++s)
    for (int ab = 0; ab <= top; ++ab)
      for (int ac = 0; ac <= top; ++ac)
        for (int ad = 0; ad <= top; ++ad) {
          const int bc_bd = k - s - ab;
          const int ad_bd_cd = m - s - ad;
          if (j - s - ab - ac - ad != 0 || bc_bd < 0 || ad_bd_cd < 0) continue;
          for (int bc = 0; bc <= bc_bd; ++bc) {
            const int bd = bc_bd - bc;
            const int cd = n - s - ac - bc;
            if (cd < 0 || ad + bd + cd + s != m) continue;
            double t = std::pow(-1.0, s) * qpow(q, binom2(s)) / q_pochhammer(q, q, s);
            for (int e : {ab, ac, ad, bc, bd, cd}) t /= q_pochhammer(q, q, e);
            sum += t;
          }
        }
  return sum * q_pochhammer(q, q, j) * q_pochhammer(q, q, k) * q_pochhammer(q, q, n) *
         q_pochhammer(q, q, m);
}

}  // namespace

TEST_CASE("cosine substitution agrees with plain Gauss-Legendre") {
  QuadratureRule gl;
  gl.kind = QuadratureRule::Kind::gauss_legendre;
  const QuadratureRule cs;
  const auto f = [](double x) { return f_p_density(x, 0.3, 0.6, 0.5) * eval_h(3, x, 0.5); };
  const auto a = integrate(f, -1.0, 1.0, cs);
  const auto b = integrate(f, -1.0, 1.0, gl);
  CHECK(a.converged);
  CHECK(std::abs(a.value - b.value) <= std::max(1e-10, 10.0 * (a.err_est + b.err_est)));
}

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
  const auto& g = gauss_legendre(8);
  double s = 0.0;
  for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], 14);
  CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("quadruple products of q-Hermite polynomials") {
  const double q = 0.5;
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= j; ++k)
      for (int n = 0; n <= k; ++n)
        for (int m = 0; m <= n && j + k + n + m <= 10; ++m) {
          const double direct =
              integrate(
                  [&](double x) {
                    const auto h = eval_h_seq(j, x, q).values;
                    return h[j] * h[k] * h[n] * h[m] * f_h_density(x, q);
                  },
                  -1.0, 1.0, {})
                  .value;
          const double series = product_moment(j, k, n, m, q);
          CHECK(std::abs(direct - series) <= 1e-7 * std::max(std::abs(series), 1.0));
        }
}

TEST_CASE("orthogonality of the full scheme") {
  const auto p = SchemeParams::real(0.5, -0.4, 0.3, 0.6, 0.6);
  for (const auto& r : check_orthogonality(Family::AW, 4, p, {}, {})) CHECK_MESSAGE(r.passed, r.name);
}

TEST_CASE("suite runs are deterministic") {
  SuiteOptions o;
  o.seed = 99;
  const auto a = run_suite("identities", o);
  const auto b = run_suite("identities", o);
  REQUIRE(a.reports.size() == b.reports.size());
  for (size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].name == b.reports[i].name);
    CHECK(a.reports[i].abs_err == b.reports[i].abs_err);
  }
}

TEST_CASE("report table has one line per report") {
  VerificationReport r;
  r.name = "x";
  r.passed = true;
  const auto s = format_reports({r, r});
  CHECK(std::count(s.begin(), s.end(), '\n') == 3);
}

TEST_CASE("expansion names round trip") {
  for (auto k : {ExpansionKind::theorem_main_wp, ExpansionKind::kernel_pm, ExpansionKind::conversion})
    CHECK(parse_expansion(expansion_name(k)) == k);
}
