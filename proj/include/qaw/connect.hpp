#ifndef QAW_CONNECT_HPP
#define QAW_CONNECT_HPP

#include <string>
#include <vector>

#include "qaw/families.hpp"
#include "qaw/params.hpp"

namespace qaw {

/// Lower-triangular connection coefficients:
///   source_n(x) = sum_{k <= n} at(k, n) * target_k(x).
struct ConnectionMatrix {
  std::string source;
  std::string target;
  int n_max = 0;
  std::vector<double> coeff;  // row k, column n; (n_max+1)^2 entries

  ConnectionMatrix() = default;
  ConnectionMatrix(std::string src, std::string dst, int n);

  double& at(int k, int n) { return coeff[static_cast<size_t>(k) * (n_max + 1) + n]; }
  double at(int k, int n) const { return coeff[static_cast<size_t>(k) * (n_max + 1) + n]; }

  static ConnectionMatrix identity(const std::string& label, int n_max);
};

/// Expansion of A in C given A in B (first) and B in C (second).
ConnectionMatrix compose(const ConnectionMatrix& a_in_b, const ConnectionMatrix& b_in_c);

/// Largest |M - I| entry divided by the largest |M| entry in the same row.
double identity_defect(const ConnectionMatrix& m);

/// forward expands the first-named family in the second; backward reverses.
enum class Direction { forward, backward };

/// AW <-> continuous dual Hahn (parameter a removed).
ConnectionMatrix connection_aw_c2h(int n_max, const SchemeParams& p, Direction dir);

/// AW <-> Al-Salam-Chihara with parameters (c, d).
/// `printed` evaluates the double-sum formula; `factored` composes the
/// AW -> C2H and C2H -> ASC single-parameter steps.
enum class AscVariant { printed, factored };
ConnectionMatrix connection_aw_asc(int n_max, const SchemeParams& p, Direction dir,
                                   AscVariant variant = AscVariant::printed);

/// w_n(.|y,rho1,z,rho2) <-> p_n(.|y,rho1): forward gives w in terms of p
/// (g-polynomial coefficients), backward gives p in terms of w.
ConnectionMatrix connection_w_p(int n_max, const SchemeParams& p, Direction dir);

/// h_n <-> p_n(.|y,rho): forward gives h in terms of p, backward p in terms of h.
ConnectionMatrix connection_h_p(int n_max, double y, double rho, double q, Direction dir);

/// out[n] = sum_k M.at(k, n) * values[k], where values are the target family.
PolySequence apply_connection(const ConnectionMatrix& m, const PolySequence& values);

enum class IdentityKind { corollary_i, corollary_ii, odwr_iv, b_convolution };

IdentityKind parse_identity(const std::string& name);

struct IdentityResidual {
  double value = 0.0;     // the left-hand sum (exactly zero in theory)
  double max_term = 0.0;  // largest term magnitude, the scale for tolerances
};

/// corollary_i/ii: finite p-g identities with k < n. odwr_iv evaluates
/// sum_j [n,j] p_j(z|y,t) g_{n-j}(z|y,t); b_convolution evaluates
/// sum_j [n,j] h_j(z) b_{n-j}(z). y is unused by b_convolution.
IdentityResidual identity_residual(IdentityKind kind, int n, int k, double z, double y, double t,
                                   double q);

struct ConversionSides {
  Complex lhs;
  Complex rhs;
};

/// Both sides of the conversion identity relating complex q-Pochhammer
/// double sums to h_{m-l}(cos eta) p_{n+l}(cos theta|cos eta, t).
ConversionSides conversion_sides(int n, int m, double theta, double eta, double t, double q);

}  // namespace qaw

#endif  // QAW_CONNECT_HPP
