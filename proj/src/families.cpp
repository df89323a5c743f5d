#include "qaw/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qaw/errors.hpp"
#include "qaw/structural.hpp"

namespace qaw {

namespace {

template <class T>
T checked(T den, const char* where) {
  if (std::abs(den) < 1e-15) throw DegenerateDenominator(std::string(where) + ": vanishing denominator");
  return den;
}

// e_n and f_n from the symmetric functions of the parameters.
// s1 = a+b+c+d, s3 = abc+abd+acd+bcd, X = abcd, six = prod over the six
// pairs of (1 - pair q^{n-1}). f_red is f_n without its (1 - q^n) factor.
template <class T>
struct Core {
  T e, f, f_red;
};

template <class T>
Core<T> ef_core(int n, T s1, T s3, T X, T six, double q) {
  const T one = T(1);
  if (n == 0) {
    const T e = (s1 - s3) / checked(one - X, "e_0");
    return {e, T(0), T(0)};
  }
  const double qn = qpow(q, n);
  const T den_e = checked((one - X * qpow(q, 2 * n - 2)) * (one - X * qpow(q, 2 * n)), "e_n");
  const T e = qpow(q, n - 1) / den_e *
              (s1 * (q - X * qpow(q, n - 1) * (1.0 + q - qpow(q, n + 1))) +
               s3 * (1.0 - qpow(q, n + 1) - qn + X * qpow(q, 2 * n - 1)));
  T f_red;
  if (n == 1) {
    // (1 - abcd q^{-1}) cancels against (abcd q^{-1})_3.
    f_red = six / checked((one - X) * (one - X) * (one - X * q), "f_1");
  } else {
    const T m = one - X * qpow(q, 2 * n - 2);
    f_red = six * (one - X * qpow(q, n - 2)) /
            checked((one - X * qpow(q, 2 * n - 3)) * m * m * (one - X * qpow(q, 2 * n - 1)), "f_n");
  }
  return {e, (1.0 - qn) * f_red, f_red};
}

Core<Complex> complex_core(int n, Complex a, Complex b, Complex c, Complex d, double q) {
  const Complex s1 = a + b + c + d;
  const Complex s3 = a * b * c + a * b * d + a * c * d + b * c * d;
  const Complex X = a * b * c * d;
  Complex six = 1.0;
  if (n >= 1) {
    const double t = qpow(q, n - 1);
    for (Complex pr : {a * b, a * c, a * d, b * c, b * d, c * d}) six *= 1.0 - pr * t;
  }
  return ef_core<Complex>(n, s1, s3, X, six, q);
}

Core<double> conjugate_core(int n, double y, double rho1, double z, double rho2, double q) {
  const double s1 = 2.0 * (rho1 * y + rho2 * z);
  const double s3 = 2.0 * rho1 * rho2 * (rho1 * z + rho2 * y);
  const double X = rho1 * rho1 * rho2 * rho2;
  double six = 1.0;
  if (n >= 1) {
    const double t = qpow(q, n - 1);
    six = (1.0 - rho1 * rho1 * t) * (1.0 - rho2 * rho2 * t) * omega(y, z, rho1 * rho2 * t);
  }
  return ef_core<double>(n, s1, s3, X, six, q);
}

// Runs a three-term recurrence v_{n+1} = B(n) v_n - C(n) v_{n-1}; the n = 0
// step uses only B(0) so C never sees q^{-1}.
template <class Step>
std::vector<double> run(int n_max, Step step) {
  if (n_max < 0) throw InvalidArgument("degree must be non-negative");
  std::vector<double> v(n_max + 1);
  v[0] = 1.0;
  double prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const auto [bn, cn] = step(n);
    const double next = bn * v[n] - (n == 0 ? 0.0 : cn * prev);
    prev = v[n];
    v[n + 1] = next;
  }
  return v;
}

PolySequence make_seq(const char* name, std::vector<double> v) { return {name, std::move(v)}; }

std::vector<double> scaled_hermite(int n_max, double v, double var) {
  return run(n_max, [&](int n) { return std::pair{v, n * var}; });
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::AW: return "AW";
    case Family::C2H: return "C2H";
    case Family::ASC: return "ASC";
    case Family::BQH: return "BQH";
    case Family::QH: return "QH";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "aw") return Family::AW;
  if (s == "c2h") return Family::C2H;
  if (s == "asc") return Family::ASC;
  if (s == "bqh") return Family::BQH;
  if (s == "qh") return Family::QH;
  throw InvalidArgument("unknown family '" + name + "'");
}

SchemeParams restrict_params(Family f, const SchemeParams& p) {
  SchemeParams r = p.to_quadruple();
  switch (f) {
    case Family::QH: r.d = 0.0; [[fallthrough]];
    case Family::BQH: r.c = 0.0; [[fallthrough]];
    case Family::ASC: r.b = 0.0; [[fallthrough]];
    case Family::C2H: r.a = 0.0; [[fallthrough]];
    case Family::AW: break;
  }
  return r;
}

ComplexRecurrenceCoeffs aw_recurrence_coeffs(int n, Complex a, Complex b, Complex c, Complex d,
                                             double q) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  const auto k = complex_core(n, a, b, c, d, q);
  return {k.e, k.f};
}

RecurrenceCoeffs aw_recurrence_coeffs(int n, const SchemeParams& p) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  if (p.form == SchemeParams::Form::conjugate) {
    const auto k = conjugate_core(n, p.y, p.rho1, p.z, p.rho2, p.q);
    return {k.e, k.f};
  }
  const auto k = complex_core(n, p.a, p.b, p.c, p.d, p.q);
  return {k.e.real(), k.f.real()};
}

LadderCoeffs kls_ladder_coeffs(int n, const SchemeParams& p) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  const Complex a = p.a, b = p.b, c = p.c, d = p.d;
  if (a == Complex(0.0)) throw InvalidArgument("ladder coefficients need a != 0");
  const double q = p.q;
  const Complex X = a * b * c * d;
  const double qn = qpow(q, n);
  LadderCoeffs r;
  // At n = 0 the factors (1 - X q^{n-1}) and (1 - X q^{2n-1}) coincide and cancel.
  const Complex extra = n == 0 ? Complex(1.0)
                               : (1.0 - X * qpow(q, n - 1)) / checked(1.0 - X * qpow(q, 2 * n - 1), "A_n");
  r.A = (1.0 - a * b * qn) * (1.0 - a * c * qn) * (1.0 - a * d * qn) * extra /
        checked(a * (1.0 - X * qpow(q, 2 * n)), "A_n");
  if (n == 0) {
    r.C = 0.0;
  } else {
    const double t = qpow(q, n - 1);
    r.C = a * (1.0 - qn) * (1.0 - b * c * t) * (1.0 - b * d * t) * (1.0 - c * d * t) /
          checked((1.0 - X * qpow(q, 2 * n - 2)) * (1.0 - X * qpow(q, 2 * n - 1)), "C_n");
  }
  return r;
}

PolySequence eval_scheme_seq(Family family, int n_max, double x, const SchemeParams& p) {
  const SchemeParams r = restrict_params(family, p);
  auto v = run(n_max, [&](int n) {
    const auto k = complex_core(n, r.a, r.b, r.c, r.d, r.q);
    return std::pair{2.0 * x - k.e.real(), k.f.real()};
  });
  return make_seq(family_name(family), std::move(v));
}

double eval_scheme(Family family, int n, double x, const SchemeParams& p) {
  return eval_scheme_seq(family, n, x, p).values.back();
}

std::vector<Complex> eval_scheme_complex(int n_max, Complex x, Complex a, Complex b, Complex c,
                                         Complex d, double q) {
  if (n_max < 0) throw InvalidArgument("degree must be non-negative");
  std::vector<Complex> v(n_max + 1);
  v[0] = 1.0;
  Complex prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const auto k = complex_core(n, a, b, c, d, q);
    const Complex next = (2.0 * x - k.e) * v[n] - (n == 0 ? Complex(0.0) : k.f * prev);
    prev = v[n];
    v[n + 1] = next;
  }
  return v;
}

PolySequence eval_p_seq(int n_max, double x, double y, double rho, double q) {
  return make_seq("p", run(n_max, [&](int n) {
                    const double qn = qpow(q, n);
                    const double c = n == 0 ? 0.0 : (1.0 - qn) * (1.0 - rho * rho * qpow(q, n - 1));
                    return std::pair{2.0 * (x - rho * y * qn), c};
                  }));
}

double eval_p(int n, double x, double y, double rho, double q) {
  return eval_p_seq(n, x, y, rho, q).values.back();
}

PolySequence eval_h_seq(int n_max, double x, double q) {
  auto s = eval_p_seq(n_max, x, 0.0, 0.0, q);
  s.family = "h";
  return s;
}

double eval_h(int n, double x, double q) { return eval_h_seq(n, x, q).values.back(); }

PolySequence eval_g_seq(int n_max, double x, double y, double rho, double q) {
  return make_seq("g", run(n_max, [&](int n) {
                    const double qn = qpow(q, n);
                    const double c = n == 0 ? 0.0 : (1.0 - qn) * (rho * rho - qpow(q, n - 1));
                    return std::pair{-2.0 * (x * qn - rho * y), c};
                  }));
}

double eval_g(int n, double x, double y, double rho, double q) {
  return eval_g_seq(n, x, y, rho, q).values.back();
}

PolySequence eval_b_seq(int n_max, double x, double q) {
  auto s = eval_g_seq(n_max, x, 0.0, 0.0, q);
  s.family = "b";
  return s;
}

double eval_b(int n, double x, double q) { return eval_b_seq(n, x, q).values.back(); }

PolySequence eval_w_seq(int n_max, double x, const SchemeParams& p) {
  if (p.form != SchemeParams::Form::conjugate)
    throw InvalidArgument("eval_w needs conjugate parameters");
  return make_seq("w", run(n_max, [&](int n) {
                    const auto k = conjugate_core(n, p.y, p.rho1, p.z, p.rho2, p.q);
                    return std::pair{2.0 * x - k.e, k.f};
                  }));
}

double eval_w(int n, double x, const SchemeParams& p) { return eval_w_seq(n, x, p).values.back(); }

RecurrenceCoeffs rescaled_a_coeffs(int n, double y, double rho1, double z, double rho2, double q) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  const double T = rho1 * rho1 * rho2 * rho2;
  if (q == 1.0) {
    const double den = checked(1.0 - T, "beta_n");
    return {(y * rho1 * (1.0 - rho2 * rho2) + z * rho2 * (1.0 - rho1 * rho1)) / den,
            n * (1.0 - rho1 * rho1) * (1.0 - rho2 * rho2) / den};
  }
  const double s = std::sqrt(1.0 - q) / 2.0;
  const double beta = conjugate_core(n, y, rho1, z, rho2, q).e / 2.0;
  const double gamma = n == 0 ? 0.0 : q_number(n, q) * conjugate_core(n, y * s, rho1, z * s, rho2, q).f_red;
  return {beta, gamma};
}

PolySequence eval_rescaled_seq(Rescaled kind, int n_max, const RescaledArgs& g) {
  const double q = g.q, x = g.x;
  switch (kind) {
    case Rescaled::H:
      if (q == 1.0) return make_seq("H", scaled_hermite(n_max, x, 1.0));
      return make_seq("H", run(n_max, [&](int n) { return std::pair{x, q_number(n, q)}; }));
    case Rescaled::P:
      if (q == 1.0)
        return make_seq("P", scaled_hermite(n_max, x - g.rho1 * g.y, 1.0 - g.rho1 * g.rho1));
      return make_seq("P", run(n_max, [&](int n) {
                        const double c =
                            n == 0 ? 0.0 : q_number(n, q) * (1.0 - g.rho1 * g.rho1 * qpow(q, n - 1));
                        return std::pair{x - g.rho1 * g.y * qpow(q, n), c};
                      }));
    case Rescaled::A:
      if (q == 1.0) {
        const auto k = rescaled_a_coeffs(1, g.y, g.rho1, g.z, g.rho2, q);
        return make_seq("A", scaled_hermite(n_max, x - k.e, k.f));
      }
      return make_seq("A", run(n_max, [&](int n) {
                        const auto k = rescaled_a_coeffs(n, g.y, g.rho1, g.z, g.rho2, q);
                        return std::pair{x - k.e, k.f};
                      }));
    case Rescaled::B:
      return make_seq("B", run(n_max, [&](int n) {
                        const double c = n == 0 ? 0.0 : -qpow(q, n - 1) * q_number(n, q);
                        return std::pair{-qpow(q, n) * x, c};
                      }));
    case Rescaled::G:
      return make_seq("G", run(n_max, [&](int n) {
                        const double c =
                            n == 0 ? 0.0 : q_number(n, q) * (g.rho1 * g.rho1 - qpow(q, n - 1));
                        return std::pair{-(x * qpow(q, n) - g.rho1 * g.y), c};
                      }));
  }
  throw InvalidArgument("unknown rescaled family");
}

double eval_rescaled(Rescaled kind, int n, const RescaledArgs& args) {
  return eval_rescaled_seq(kind, n, args).values.back();
}

Complex classical(Classical kind, int n, Complex arg, double q) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  if (kind == Classical::RogersSzego) {
    Complex s = 0.0, pw = 1.0;
    for (int k = 0; k <= n; ++k) {
      s += q_binomial(n, k, q) * pw;
      pw *= arg;
    }
    return s;
  }
  Complex prev = 0.0, cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex next = kind == Classical::ChebyshevU ? 2.0 * arg * cur - prev
                                                       : arg * cur - double(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace qaw
