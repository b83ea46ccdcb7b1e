#pragma once

// Closed-form solution of the polar part of the separated Schroedinger
// equation for the ring-shaped potential (A/sin^2 + B/cos^2)/r^2: the
// separation constant E_theta, the modified orbital angular momentum, and
// consistency checks on the underlying polynomial reduction.

namespace molspec {

enum class Parity { even, odd };

// Input of the angular problem. E_phi is fixed to m^2 (no azimuthal
// potential), so only m^2 enters through a_tilde().
struct AngularChannel {
  int n_tilde = 0;  // oscillation quanta, >= 0
  int m = 0;        // magnetic quantum number
  double A = 0;     // sin^-2 strength, >= 0
  double B = 0;     // cos^-2 strength, >= 0
  Parity parity = Parity::even; // consulted only when B == 0

  double a_tilde() const { return static_cast<double>(m) * m + A; }
};

struct AngularSolution {
  double e_theta;   // separation constant, = ell_tilde*(ell_tilde+1)
  double ell_tilde; // modified orbital angular momentum, real, >= 0
};

// Coefficients of the quadratic under the square root of the pi polynomial,
// evaluated at the selected root k2, together with both k roots.
struct NuRootCheck {
  double alpha_q;
  double beta_q;
  double gamma_q;
  double k1;
  double k2;

  double discriminant() const { return beta_q * beta_q - 4.0 * alpha_q * gamma_q; }
};

// B > 0: ell_tilde = 1/2 + 2*n_tilde + sqrt(m^2+A) + sqrt(1/4+B).
// B == 0: ell_tilde = nu + sqrt(m^2+A), nu = 2*n_tilde (even) or
// 1 + 2*n_tilde (odd). Throws std::invalid_argument on invalid channels.
AngularSolution angular_eigenvalue(const AngularChannel& ch);

// Inverts the B > 0 eigenvalue relation: the number of oscillation quanta
// consistent with a given ell_tilde. Throws std::domain_error when the
// preconditions fail and std::invalid_argument when the residual is not an
// integer multiple of 2 ("non-quantized" ell_tilde).
int oscillation_quanta(double ell_tilde, int m, double A, double B);

// Double roots of k with the quadratic coefficients evaluated at k2 (the
// branch giving a decreasing tau). The discriminant vanishes identically.
NuRootCheck nu_k_roots(double a_tilde, double B, double e_theta);

} // namespace molspec
