#include "qaw/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qaw/errors.hpp"

namespace qaw {

namespace {

bool nearly_real(Complex v) { return std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v)); }

void check_base(double q) {
  if (!std::isfinite(q) || q <= -1.0 || q > 1.0)
    throw InvalidArgument("base q must lie in (-1, 1], got " + std::to_string(q));
}

void check_quad(Complex a, Complex b, Complex c, Complex d) {
  const Complex pairs[] = {a * b, a * c, a * d, b * c, b * d, c * d};
  for (Complex p : pairs) {
    if (!nearly_real(p)) throw InvalidArgument("pairwise parameter products must be real");
    if (std::abs(p) > 1.0 + 1e-15)
      throw InvalidArgument("pairwise parameter products must have modulus <= 1");
  }
  const Complex s1 = a + b + c + d;
  const Complex s3 = a * b * c + a * b * d + a * c * d + b * c * d;
  if (!nearly_real(s1) || !nearly_real(s3) || !nearly_real(a * b * c * d))
    throw InvalidArgument("parameters must give real recurrence coefficients");
}

}  // namespace

SchemeParams SchemeParams::real(double a, double b, double c, double d, double q) {
  return quad(a, b, c, d, q);
}

SchemeParams SchemeParams::quad(Complex a, Complex b, Complex c, Complex d, double q) {
  check_base(q);
  check_quad(a, b, c, d);
  SchemeParams p;
  p.form = Form::real_quad;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.q = q;
  return p;
}

SchemeParams SchemeParams::conjugate(double y, double rho1, double z, double rho2, double q) {
  check_base(q);
  if (std::abs(y) > 1.0 || std::abs(z) > 1.0) throw InvalidArgument("y and z must lie in [-1, 1]");
  if (std::abs(rho1) > 1.0 || std::abs(rho2) > 1.0)
    throw InvalidArgument("rho1 and rho2 must satisfy |rho| <= 1");
  SchemeParams p;
  p.form = Form::conjugate;
  p.y = y;
  p.z = z;
  p.rho1 = rho1;
  p.rho2 = rho2;
  p.q = q;
  const Complex et = std::polar(1.0, std::acos(y));
  const Complex ez = std::polar(1.0, std::acos(z));
  p.a = rho1 * et;
  p.b = rho1 * std::conj(et);
  p.c = rho2 * ez;
  p.d = rho2 * std::conj(ez);
  return p;
}

SchemeParams SchemeParams::to_quadruple() const {
  SchemeParams p = *this;
  p.form = Form::real_quad;
  return p;
}

SchemeParams SchemeParams::to_conjugate() const {
  if (form == Form::conjugate) return *this;
  auto split = [](Complex u, Complex v, double& rho, double& cosine) {
    if (std::abs(u - std::conj(v)) > 1e-12 * std::max(1.0, std::abs(u)))
      throw InvalidArgument("to_conjugate: parameters are not a conjugate pair");
    rho = std::abs(u);
    cosine = rho == 0.0 ? 0.0 : std::clamp(u.real() / rho, -1.0, 1.0);
  };
  double r1, y0, r2, z0;
  split(a, b, r1, y0);
  split(c, d, r2, z0);
  return conjugate(y0, r1, z0, r2, q);
}

}  // namespace qaw
