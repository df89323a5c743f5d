#include "qaw/connect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qaw/errors.hpp"

namespace qaw {

namespace {

// Complex lower-triangular matrix used while assembling coefficients.
struct CMat {
  int n_max;
  std::vector<Complex> v;
  explicit CMat(int n) : n_max(n), v(static_cast<size_t>(n + 1) * (n + 1), 0.0) {}
  Complex& at(int k, int n) { return v[static_cast<size_t>(k) * (n_max + 1) + n]; }
  Complex at(int k, int n) const { return v[static_cast<size_t>(k) * (n_max + 1) + n]; }
};

CMat compose(const CMat& ab, const CMat& bc) {
  CMat r(ab.n_max);
  for (int n = 0; n <= r.n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      Complex s = 0.0;
      for (int j = k; j <= n; ++j) s += bc.at(k, j) * ab.at(j, n);
      r.at(k, n) = s;
    }
  return r;
}

ConnectionMatrix to_real(const CMat& m, std::string src, std::string dst) {
  ConnectionMatrix r(std::move(src), std::move(dst), m.n_max);
  for (int n = 0; n <= m.n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      const Complex c = m.at(k, n);
      if (std::abs(c.imag()) > 1e-9 * std::max(1.0, std::abs(c)))
        throw InvalidArgument("connection coefficients are not real for these parameters");
      r.at(k, n) = c.real();
    }
  return r;
}

Complex cpow(Complex a, int k) {
  Complex r = 1.0;
  for (int j = 0; j < k; ++j) r *= a;
  return r;
}

Complex checked(Complex den) {
  if (std::abs(den) < 1e-15) throw DegenerateDenominator("connection: vanishing denominator");
  return den;
}

double checked(double den) {
  if (std::abs(den) < 1e-15) throw DegenerateDenominator("connection: vanishing denominator");
  return den;
}

// AW(a,b,c,d) in C2H(b,c,d) and back.
CMat aw_c2h(int n_max, Complex a, Complex b, Complex c, Complex d, double q, Direction dir) {
  CMat m(n_max);
  const Complex X = a * b * c * d;
  for (int n = 0; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      const int r = n - i;
      const double qi = qpow(q, i);
      Complex num = q_binomial(n, i, q) * q_pochhammer(b * c * qi, q, r) *
                    q_pochhammer(b * d * qi, q, r) * q_pochhammer(c * d * qi, q, r);
      if (dir == Direction::forward) {
        num *= cpow(-a, r) * qpow(q, binom2(r));
        if (r > 0) num /= checked(q_pochhammer(X * qpow(q, n + i - 1), q, r));
      } else {
        num *= cpow(a, r);
        num /= checked(q_pochhammer(X * qpow(q, 2 * i), q, r));
      }
      m.at(i, n) = num;
    }
  return m;
}

CMat aw_asc_printed(int n_max, Complex a, Complex b, Complex c, Complex d, double q, Direction dir) {
  CMat m(n_max);
  const Complex X = a * b * c * d;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      const int r = n - k;
      Complex inner = 0.0;
      for (int mm = 0; mm <= r; ++mm) {
        Complex t = q_binomial(r, mm, q) * cpow(a, mm) * cpow(b, r - mm);
        if (dir == Direction::forward) {
          // (-1)^r q^{C(r,2)} q^{m(m-r)} = (-1)^r q^{C(r-m,2) + C(m,2)}
          t *= qpow(q, binom2(r - mm) + binom2(mm));
          const double qs = qpow(q, n - mm);
          t *= q_pochhammer(b * c * qs, q, mm) * q_pochhammer(b * d * qs, q, mm);
          if (mm > 0) t /= checked(q_pochhammer(X * qpow(q, 2 * n - mm - 1), q, mm));
        } else {
          const double qs = qpow(q, k);
          t *= q_pochhammer(b * c * qs, q, mm) * q_pochhammer(b * d * qs, q, mm);
          t /= checked(q_pochhammer(X * qpow(q, 2 * k), q, mm));
        }
        inner += t;
      }
      Complex pre = q_binomial(n, k, q) * q_pochhammer(c * d * qpow(q, k), q, r);
      if (dir == Direction::forward && (r % 2 == 1)) pre = -pre;
      m.at(k, n) = pre * inner;
    }
  return m;
}

}  // namespace

ConnectionMatrix::ConnectionMatrix(std::string src, std::string dst, int n)
    : source(std::move(src)), target(std::move(dst)), n_max(n) {
  if (n < 0) throw InvalidArgument("n_max must be non-negative");
  coeff.assign(static_cast<size_t>(n + 1) * (n + 1), 0.0);
}

ConnectionMatrix ConnectionMatrix::identity(const std::string& label, int n_max) {
  ConnectionMatrix m(label, label, n_max);
  for (int n = 0; n <= n_max; ++n) m.at(n, n) = 1.0;
  return m;
}

ConnectionMatrix compose(const ConnectionMatrix& ab, const ConnectionMatrix& bc) {
  if (ab.n_max != bc.n_max) throw InvalidArgument("compose: size mismatch");
  ConnectionMatrix r(ab.source, bc.target, ab.n_max);
  for (int n = 0; n <= r.n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      double s = 0.0;
      for (int j = k; j <= n; ++j) s += bc.at(k, j) * ab.at(j, n);
      r.at(k, n) = s;
    }
  return r;
}

double identity_defect(const ConnectionMatrix& m) {
  double worst = 0.0;
  for (int k = 0; k <= m.n_max; ++k) {
    double row_max = 0.0, row_err = 0.0;
    for (int n = 0; n <= m.n_max; ++n) {
      row_max = std::max(row_max, std::abs(m.at(k, n)));
      row_err = std::max(row_err, std::abs(m.at(k, n) - (k == n ? 1.0 : 0.0)));
    }
    worst = std::max(worst, row_err / std::max(row_max, 1.0));
  }
  return worst;
}

ConnectionMatrix connection_aw_c2h(int n_max, const SchemeParams& p, Direction dir) {
  const auto m = aw_c2h(n_max, p.a, p.b, p.c, p.d, p.q, dir);
  return dir == Direction::forward ? to_real(m, "AW", "C2H") : to_real(m, "C2H", "AW");
}

ConnectionMatrix connection_aw_asc(int n_max, const SchemeParams& p, Direction dir,
                                   AscVariant variant) {
  const Complex a = p.a, b = p.b, c = p.c, d = p.d;
  const double q = p.q;
  CMat m(n_max);
  if (variant == AscVariant::printed) {
    m = aw_asc_printed(n_max, a, b, c, d, q, dir);
  } else {
    // C2H(b,c,d) <-> ASC(c,d) is the same single-parameter step with b in
    // the role of the removed parameter.
    const auto outer = aw_c2h(n_max, a, b, c, d, q, dir);
    const auto inner = aw_c2h(n_max, b, 0.0, c, d, q, dir);
    m = dir == Direction::forward ? compose(outer, inner) : compose(inner, outer);
  }
  return dir == Direction::forward ? to_real(m, "AW", "ASC") : to_real(m, "ASC", "AW");
}

ConnectionMatrix connection_w_p(int n_max, const SchemeParams& p, Direction dir) {
  if (p.form != SchemeParams::Form::conjugate)
    throw InvalidArgument("connection_w_p needs conjugate parameters");
  const double q = p.q, r1 = p.rho1, r2 = p.rho2;
  const double T = r1 * r1 * r2 * r2;
  ConnectionMatrix m = dir == Direction::forward ? ConnectionMatrix("w", "p", n_max)
                                                 : ConnectionMatrix("p", "w", n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= n; ++j) {
      const int r = n - j;
      if (r == 0) {
        m.at(j, n) = 1.0;
        continue;
      }
      double c = q_binomial(n, j, q) * std::pow(r2, r) * q_pochhammer(r1 * r1 * qpow(q, j), q, r);
      if (dir == Direction::forward) {
        c /= checked(q_pochhammer(T * qpow(q, n + j - 1), q, r));
        c *= eval_g(r, p.z, p.y, r1 * r2 * qpow(q, n - 1), q);
      } else {
        c /= checked(q_pochhammer(T * qpow(q, 2 * j), q, r));
        c *= eval_p(r, p.z, p.y, r1 * r2 * qpow(q, j), q);
      }
      m.at(j, n) = c;
    }
  return m;
}

ConnectionMatrix connection_h_p(int n_max, double y, double rho, double q, Direction dir) {
  ConnectionMatrix m = dir == Direction::forward ? ConnectionMatrix("h", "p", n_max)
                                                 : ConnectionMatrix("p", "h", n_max);
  const auto side = dir == Direction::forward ? eval_h_seq(n_max, y, q) : eval_b_seq(n_max, y, q);
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      m.at(j, n) = q_binomial(n, j, q) * std::pow(rho, n - j) * side.values[n - j];
  return m;
}

PolySequence apply_connection(const ConnectionMatrix& m, const PolySequence& values) {
  if (values.n_max() != m.n_max) throw InvalidArgument("apply_connection: length mismatch");
  PolySequence out{m.source, std::vector<double>(m.n_max + 1, 0.0)};
  for (int n = 0; n <= m.n_max; ++n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += m.at(k, n) * values.values[k];
    out.values[n] = s;
  }
  return out;
}

IdentityKind parse_identity(const std::string& name) {
  if (name == "corollary_i") return IdentityKind::corollary_i;
  if (name == "corollary_ii") return IdentityKind::corollary_ii;
  if (name == "odwr_iv") return IdentityKind::odwr_iv;
  if (name == "b_convolution") return IdentityKind::b_convolution;
  throw InvalidArgument("unknown identity '" + name + "'");
}

IdentityResidual identity_residual(IdentityKind kind, int n, int k, double z, double y, double t,
                                   double q) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  IdentityResidual r;
  auto add = [&](double term) {
    r.value += term;
    r.max_term = std::max(r.max_term, std::abs(term));
  };
  const double t2 = t * t;
  switch (kind) {
    case IdentityKind::corollary_i: {
      if (k < 0 || k >= n) throw InvalidArgument("corollary identities need 0 <= k < n");
      const int r0 = n - k;
      const auto ps = eval_p_seq(r0, z, y, t * qpow(q, k), q).values;
      const auto gs = eval_g_seq(r0, z, y, t * qpow(q, n - 1), q).values;
      for (int j = 0; j <= r0; ++j) {
        double term = q_binomial(r0, j, q) * ps[j] * gs[r0 - j];
        term /= checked(q_pochhammer(t2 * qpow(q, 2 * k), q, j));
        if (r0 - j > 0) term /= checked(q_pochhammer(t2 * qpow(q, n + j + k - 1), q, r0 - j));
        add(term);
      }
      break;
    }
    case IdentityKind::corollary_ii: {
      if (k < 0 || k >= n) throw InvalidArgument("corollary identities need 0 <= k < n");
      const int r0 = n - k;
      for (int m = 0; m <= r0; ++m) {
        double term = q_binomial(r0, m, q) * eval_p(r0 - m, z, y, t * qpow(q, m + k), q);
        if (m > 0) {
          term *= eval_g(m, z, y, t * qpow(q, m + k - 1), q);
          term /= checked(q_pochhammer(t2 * qpow(q, m + 2 * k - 1), q, m));
        }
        term /= checked(q_pochhammer(t2 * qpow(q, 2 * m + 2 * k), q, r0 - m));
        add(term);
      }
      break;
    }
    case IdentityKind::odwr_iv: {
      const auto ps = eval_p_seq(n, z, y, t, q).values;
      const auto gs = eval_g_seq(n, z, y, t, q).values;
      for (int j = 0; j <= n; ++j) add(q_binomial(n, j, q) * ps[j] * gs[n - j]);
      break;
    }
    case IdentityKind::b_convolution: {
      const auto hs = eval_h_seq(n, z, q).values;
      const auto bs = eval_b_seq(n, z, q).values;
      for (int j = 0; j <= n; ++j) add(q_binomial(n, j, q) * hs[j] * bs[n - j]);
      break;
    }
  }
  return r;
}

ConversionSides conversion_sides(int n, int m, double theta, double eta, double t, double q) {
  if (n < 0 || m < 0) throw InvalidArgument("n and m must be non-negative");
  const Complex I(0.0, 1.0);
  const Complex u1 = t * std::exp(I * (eta - theta));
  const Complex u2 = t * std::exp(I * (theta - eta));
  const Complex u3 = t * std::exp(-I * (theta + eta));
  Complex lhs = 0.0;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= m; ++j) {
      Complex term = q_binomial(n, k, q) * q_binomial(m, j, q) * q_pochhammer(u1, q, k) *
                     q_pochhammer(u2, q, j) * q_pochhammer(u3, q, k + j);
      term /= checked(q_pochhammer(t * t, q, k + j));
      term *= std::exp(I * ((2.0 * k - n) * theta + (2.0 * j - m) * eta));
      lhs += term;
    }
  const double y = std::cos(theta), z = std::cos(eta);
  const auto hs = eval_h_seq(m, z, q).values;
  const auto ps = eval_p_seq(n + m, y, z, t, q).values;
  Complex rhs = 0.0;
  for (int l = 0; l <= m; ++l) {
    double term = q_binomial(m, l, q) * std::pow(-t, l) * qpow(q, binom2(l)) * hs[m - l] * ps[n + l];
    rhs += term / checked(q_pochhammer(t * t, q, n + l));
  }
  return {lhs, rhs};
}

}  // namespace qaw
