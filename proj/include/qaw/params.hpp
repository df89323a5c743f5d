#ifndef QAW_PARAMS_HPP
#define QAW_PARAMS_HPP

#include "qaw/qkernel.hpp"

namespace qaw {

/// Parameters of the Askey-Wilson scheme.
///
/// A real_quad set stores (a, b, c, d) directly; the entries may be complex
/// as long as the symmetric functions entering the recurrence are real.
/// A conjugate set stores (y, rho1, z, rho2) and also fills a..d with
/// a = rho1 e^{i theta}, b = conj(a), c = rho2 e^{i eta}, d = conj(c),
/// where y = cos(theta), z = cos(eta).
struct SchemeParams {
  enum class Form { real_quad, conjugate };

  Form form = Form::real_quad;
  Complex a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double y = 0.0, z = 0.0, rho1 = 0.0, rho2 = 0.0;
  double q = 0.0;

  /// Real quadruple; validates the Favard condition |pairwise product| <= 1.
  static SchemeParams real(double a, double b, double c, double d, double q);
  /// Complex quadruple; pairwise products, a+b+c+d, the triple sum and abcd
  /// must be real (within round-off).
  static SchemeParams quad(Complex a, Complex b, Complex c, Complex d, double q);
  /// Conjugate-pair form; requires |y|, |z| <= 1 and |rho1|, |rho2| <= 1.
  static SchemeParams conjugate(double y, double rho1, double z, double rho2, double q);

  /// Same parameters expressed as a real_quad set (a..d complex).
  SchemeParams to_quadruple() const;
  /// Conjugate form; requires b == conj(a) and d == conj(c).
  SchemeParams to_conjugate() const;

  Complex abcd() const { return a * b * c * d; }
};

}  // namespace qaw

#endif  // QAW_PARAMS_HPP
