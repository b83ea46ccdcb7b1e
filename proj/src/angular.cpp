#include "molspec/angular.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace molspec {

namespace {

void validate(const AngularChannel& ch) {
  if (ch.n_tilde < 0)
    throw std::invalid_argument("angular channel: n_tilde must be >= 0");
  if (ch.A < 0)
    throw std::invalid_argument("angular channel: A must be >= 0");
  if (ch.B < 0)
    throw std::invalid_argument("angular channel: B must be >= 0");
}

} // namespace

AngularSolution angular_eigenvalue(const AngularChannel& ch) {
  validate(ch);
  double root_a = std::sqrt(ch.a_tilde());
  double ell;
  if (ch.B > 0) {
    ell = 0.5 + 2.0 * ch.n_tilde + root_a + std::sqrt(0.25 + ch.B);
  } else {
    // Limiting case: sqrt(1/4+B) -> +-1/2, i.e. nu = 2*n_tilde (even) or
    // 1 + 2*n_tilde (odd).
    int nu = (ch.parity == Parity::even) ? 2 * ch.n_tilde : 1 + 2 * ch.n_tilde;
    ell = nu + root_a;
  }
  return {ell * (ell + 1.0), ell};
}

int oscillation_quanta(double ell_tilde, int m, double A, double B) {
  if (!(B > 0))
    throw std::domain_error("oscillation_quanta: defined for B > 0 only");
  if (A < 0) throw std::domain_error("oscillation_quanta: A must be >= 0");
  double base = 0.5 + std::sqrt(static_cast<double>(m) * m + A) + std::sqrt(0.25 + B);
  if (ell_tilde < base - 1e-9)
    throw std::domain_error("oscillation_quanta: ell_tilde below the n_tilde=0 value");
  double q = (ell_tilde - base) / 2.0;
  double rounded = std::round(q);
  if (std::abs(q - rounded) > 1e-9)
    throw std::invalid_argument(
        "oscillation_quanta: ell_tilde = " + std::to_string(ell_tilde) +
        " is not quantized for this channel (residual " + std::to_string(q) + ")");
  return static_cast<int>(rounded);
}

NuRootCheck nu_k_roots(double a_tilde, double B, double e_theta) {
  if (a_tilde < 0) throw std::domain_error("nu_k_roots: a_tilde must be >= 0");
  if (B < 0) throw std::domain_error("nu_k_roots: B must be >= 0");
  double half_span = 0.5 * std::sqrt(a_tilde * (1.0 + 4.0 * B));
  double center = -0.5 * (a_tilde + B - e_theta);
  NuRootCheck out;
  out.k1 = center + half_span;
  out.k2 = center - half_span;
  out.alpha_q = 4.0 * e_theta - 8.0 * out.k2 + 1.0;
  out.beta_q = 4.0 * e_theta - 4.0 * a_tilde + 4.0 * B - 8.0 * out.k2 + 2.0;
  out.gamma_q = 1.0 + 4.0 * B;
  return out;
}

} // namespace molspec
