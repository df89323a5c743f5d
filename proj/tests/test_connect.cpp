#include <doctest.h>

#include <cmath>

#include "qaw/connect.hpp"
#include "qaw/errors.hpp"

using namespace qaw;

TEST_CASE("degree zero matrices are [[1]]") {
  const auto p = SchemeParams::conjugate(0.2, 0.4, -0.3, 0.5, 0.6);
  CHECK(connection_w_p(0, p, Direction::forward).at(0, 0) == 1.0);
  CHECK(connection_aw_c2h(0, p, Direction::backward).at(0, 0) == 1.0);
}

TEST_CASE("round trips compose to the identity") {
  for (double q : {-0.5, 0.0, 0.3, 0.7}) {
    const auto real = SchemeParams::real(0.4, -0.3, 0.2, 0.6, q);
    const auto conj = SchemeParams::conjugate(0.3, 0.5, -0.7, 0.6, q);
    CHECK(identity_defect(compose(connection_aw_c2h(10, real, Direction::forward),
                                  connection_aw_c2h(10, real, Direction::backward))) <= 1e-10);
    CHECK(identity_defect(compose(connection_aw_asc(10, real, Direction::forward, AscVariant::factored),
                                  connection_aw_asc(10, real, Direction::backward, AscVariant::factored))) <=
          1e-10);
    CHECK(identity_defect(compose(connection_w_p(10, conj, Direction::forward),
                                  connection_w_p(10, conj, Direction::backward))) <= 1e-10);
    CHECK(identity_defect(compose(connection_h_p(10, 0.3, 0.5, q, Direction::forward),
                                  connection_h_p(10, 0.3, 0.5, q, Direction::backward))) <= 1e-10);
  }
}

TEST_CASE("connection reproduces pointwise values") {
  const auto p = SchemeParams::conjugate(0.3, 0.5, -0.7, 0.6, 0.4);
  const auto m = connection_w_p(8, p, Direction::forward);
  for (double x : {-0.8, 0.1, 0.65}) {
    const auto w = eval_w_seq(8, x, p);
    const auto via = apply_connection(m, eval_p_seq(8, x, p.y, p.rho1, p.q));
    for (int n = 0; n <= 8; ++n) CHECK(via.values[n] == doctest::Approx(w.values[n]).epsilon(1e-10));
  }
}

TEST_CASE("finite identities vanish") {
  for (double q : {-0.6, 0.0, 0.5})
    for (double t : {-0.7, 0.4})
      for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < n; ++k)
          for (auto kind : {IdentityKind::corollary_i, IdentityKind::corollary_ii}) {
            const auto r = identity_residual(kind, n, k, 0.3, -0.45, t, q);
            CHECK(std::abs(r.value) <= 1e-11 * std::max(r.max_term, 1e-300));
          }
}

TEST_CASE("conversion lemma sides agree") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) {
      const auto s = conversion_sides(n, m, 0.7, 2.1, -0.6, 0.45);
      CHECK(std::abs(s.lhs.real() - s.rhs.real()) <= 1e-10);
      CHECK(std::abs(s.lhs.imag()) <= 1e-10);
    }
}

TEST_CASE("composition checks dimensions") {
  const auto p = SchemeParams::real(0.4, -0.3, 0.2, 0.6, 0.5);
  CHECK_THROWS_AS(compose(connection_aw_c2h(3, p, Direction::forward),
                          connection_aw_c2h(4, p, Direction::backward)),
                  InvalidArgument);
}
