#include "molspec/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "molspec/units.hpp"

namespace molspec {

PekerisCoefficients pekeris_coefficients(double alpha) {
  if (!(alpha > 0))
    throw std::domain_error("pekeris_coefficients: alpha must be positive");
  double ia = 1.0 / alpha;
  return {alpha,
          1.0 - 3.0 * ia + 3.0 * ia * ia,
          4.0 * ia - 6.0 * ia * ia,
          -ia + 3.0 * ia * ia};
}

double morse_c_coefficient(const MoleculeParams& p, double e_theta) {
  double kappa = units::hbar2_over_2mu(p.mu); // hbar^2/2mu, eV*A^2
  double a = p.width();
  double alpha = a * p.re;
  double re2 = p.re * p.re;
  double d2 = pekeris_coefficients(alpha).d2;
  double numer = p.De / kappa - (e_theta / re2) * (2.0 / alpha - 3.0 / (alpha * alpha));
  double denom = a * std::sqrt(p.De / kappa + e_theta * d2 / re2);
  return numer / denom;
}

double kratzer_d_coefficient(const MoleculeParams& p, double e_theta) {
  double kappa = units::hbar2_over_2mu(p.mu);
  return p.De * p.re * p.re / kappa + e_theta;
}

double morse_energy_ev(const MoleculeParams& p, int n, double e_theta) {
  if (n < 0) throw std::domain_error("morse_energy: n must be >= 0");
  double kappa = units::hbar2_over_2mu(p.mu);
  double a = p.width();
  double alpha = a * p.re;
  double c = morse_c_coefficient(p, e_theta);
  double n_max = c - 0.5;
  if (n > std::floor(n_max))
    throw std::domain_error("morse_energy: level n = " + std::to_string(n) +
                            " is unbound (n_max = " + std::to_string(n_max) + ")");
  double d0 = pekeris_coefficients(alpha).d0;
  double shift = kappa * e_theta / (p.re * p.re) * d0;
  double dn = c - (n + 0.5);
  return shift - kappa * a * a * dn * dn;
}

EnergyLevel morse_energy(const MoleculeParams& p, int n, const AngularChannel& ch) {
  AngularSolution sol = angular_eigenvalue(ch);
  return {p.name, PotentialKind::morse, n, ch, morse_energy_ev(p, n, sol.e_theta),
          morse_c_coefficient(p, sol.e_theta)};
}

MorseBound morse_nmax(const MoleculeParams& p, const AngularSolution& sol) {
  double c = morse_c_coefficient(p, sol.e_theta);
  double n_max = c - 0.5;
  if (c <= 0.5) return {n_max, 0, 0};
  return {n_max, static_cast<int>(std::floor(n_max)) + 1,
          static_cast<int>(std::llround(n_max))};
}

double kratzer_energy_ev(const MoleculeParams& p, int n, double e_theta) {
  if (n < 0) throw std::domain_error("kratzer_energy: n must be >= 0");
  double kappa = units::hbar2_over_2mu(p.mu);
  double d = kratzer_d_coefficient(p, e_theta);
  double pref = 2.0 * p.De * p.re / kappa; // 4 mu De re / hbar^2
  double denom = 1.0 + 2.0 * n + std::sqrt(1.0 + 4.0 * d);
  return -kappa * pref * pref / (denom * denom);
}

EnergyLevel kratzer_energy(const MoleculeParams& p, int n, const AngularChannel& ch) {
  AngularSolution sol = angular_eigenvalue(ch);
  return {p.name, PotentialKind::kratzer, n, ch,
          kratzer_energy_ev(p, n, sol.e_theta),
          kratzer_d_coefficient(p, sol.e_theta)};
}

} // namespace molspec
