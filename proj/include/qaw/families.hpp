#ifndef QAW_FAMILIES_HPP
#define QAW_FAMILIES_HPP

// Polynomial families of the Askey-Wilson scheme evaluated by three-term
// recurrence. All families are monic in 2x:
//   alpha_{n+1}(x) = (2x - e_n) alpha_n(x) - f_n alpha_{n-1}(x),
// alpha_{-1} = 0, alpha_0 = 1.
//
// Bases are plain reals so that identities relating q and 1/q can be
// evaluated; the density and sampling layers restrict to QBase.

#include <string>
#include <vector>

#include "qaw/params.hpp"
#include "qaw/qkernel.hpp"

namespace qaw {

/// Askey-Wilson (4 params), continuous dual Hahn (a = 0), Al-Salam-Chihara
/// (a = b = 0), continuous big q-Hermite (only d) and continuous q-Hermite.
enum class Family { AW, C2H, ASC, BQH, QH };

const char* family_name(Family f);
/// Accepts "aw", "c2h", "asc", "bqh", "qh" (case-insensitive).
Family parse_family(const std::string& name);

/// Copy of p with the parameters unused by the family set to zero.
SchemeParams restrict_params(Family f, const SchemeParams& p);

/// Values of one family at a fixed point; values[n] is the n-th polynomial.
struct PolySequence {
  std::string family;
  std::vector<double> values;
  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

struct RecurrenceCoeffs {
  double e = 0.0;
  double f = 0.0;
};

struct ComplexRecurrenceCoeffs {
  Complex e = 0.0;
  Complex f = 0.0;
};

struct LadderCoeffs {
  Complex A = 0.0;
  Complex C = 0.0;
};

/// e_n, f_n of the AW recurrence. Conjugate parameters go through the
/// omega-based real formulas. Throws DegenerateDenominator when a factor
/// (1 - abcd q^k) vanishes.
RecurrenceCoeffs aw_recurrence_coeffs(int n, const SchemeParams& p);

/// Same quantities for arbitrary complex parameters.
ComplexRecurrenceCoeffs aw_recurrence_coeffs(int n, Complex a, Complex b, Complex c, Complex d,
                                             double q);

/// A_n, C_n with e_n = a + 1/a - A_n - C_n and f_n = A_{n-1} C_n.
/// Throws InvalidArgument when a == 0.
LadderCoeffs kls_ladder_coeffs(int n, const SchemeParams& p);

double eval_scheme(Family family, int n, double x, const SchemeParams& p);
PolySequence eval_scheme_seq(Family family, int n_max, double x, const SchemeParams& p);
/// Complex-parameter, complex-argument recurrence (used as an oracle).
std::vector<Complex> eval_scheme_complex(int n_max, Complex x, Complex a, Complex b, Complex c,
                                         Complex d, double q);

/// Al-Salam-Chihara polynomials with conjugate parameters rho e^{+-i eta},
/// y = cos(eta).
double eval_p(int n, double x, double y, double rho, double q);
PolySequence eval_p_seq(int n_max, double x, double y, double rho, double q);

/// Continuous q-Hermite h_n(x|q).
double eval_h(int n, double x, double q);
PolySequence eval_h_seq(int n_max, double x, double q);

/// b_n(x|q), the q -> 1/q companion of h_n.
double eval_b(int n, double x, double q);
PolySequence eval_b_seq(int n_max, double x, double q);

/// g_n(x|y,rho,q), the q -> 1/q companion of p_n; g_n(.|.,0,q) = b_n.
double eval_g(int n, double x, double y, double rho, double q);
PolySequence eval_g_seq(int n_max, double x, double y, double rho, double q);

/// AW polynomials with two conjugate pairs, evaluated in real arithmetic.
double eval_w(int n, double x, const SchemeParams& p);
PolySequence eval_w_seq(int n_max, double x, const SchemeParams& p);

/// Rescaled monic families on S(q).
enum class Rescaled { H, P, A, B, G };

/// Arguments of the rescaled families. H and B use x only; P and G use
/// (x, y, rho1); A uses (x, y, rho1, z, rho2).
struct RescaledArgs {
  double x = 0.0;
  double y = 0.0;
  double rho1 = 0.0;
  double z = 0.0;
  double rho2 = 0.0;
  double q = 0.0;
};

double eval_rescaled(Rescaled kind, int n, const RescaledArgs& args);
PolySequence eval_rescaled_seq(Rescaled kind, int n_max, const RescaledArgs& args);

/// beta_n, gamma_n of the rescaled A_n recurrence
/// A_{n+1} = (x - beta_n) A_n - gamma_n A_{n-1}.
RecurrenceCoeffs rescaled_a_coeffs(int n, double y, double rho1, double z, double rho2, double q);

enum class Classical { HermiteMonic, ChebyshevU, RogersSzego };

/// Monic Hermite (weight e^{-x^2/2}), Chebyshev U, and Rogers-Szego
/// R_n(x|q) = sum_k [n,k]_q x^k. q is used by RogersSzego only.
Complex classical(Classical kind, int n, Complex arg, double q = 0.0);

}  // namespace qaw

#endif  // QAW_FAMILIES_HPP
