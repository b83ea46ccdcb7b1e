#pragma once

#include <string>

#include "molspec/angular.hpp"
#include "molspec/catalog.hpp"

namespace molspec {

enum class PotentialKind { morse, kratzer };

// Exponential-series replacement of the 1/r^2 centrifugal term, matched to
// second order at r = re. alpha = a*re.
struct PekerisCoefficients {
  double alpha;
  double d0; // 1 - 3/alpha + 3/alpha^2
  double d1; // 4/alpha - 6/alpha^2
  double d2; // -1/alpha + 3/alpha^2
};

PekerisCoefficients pekeris_coefficients(double alpha);

struct EnergyLevel {
  std::string molecule;
  PotentialKind potential;
  int n;
  AngularChannel channel;
  double energy_ev;
  double aux_coeff; // C_nm (Morse) or D_nm (Kratzer)
};

// Vertex of the Morse energy parabola in n.
struct MorseBound {
  double n_max;      // C_nm - 1/2, real valued
  int bound_count;   // floor(n_max) + 1: allowed n values 0..floor(n_max)
  int nmax_rounded;  // n_max to the nearest integer, as quoted in level-count
                     // tabulations
};

// Dimensionless C coefficient of the Pekeris-approximated Morse spectrum.
double morse_c_coefficient(const MoleculeParams& p, double e_theta);

// D coefficient of the Kratzer spectrum: 2 mu De re^2/hbar^2 + e_theta.
double kratzer_d_coefficient(const MoleculeParams& p, double e_theta);

// Morse energy with the Pekeris-expanded centrifugal term, in eV.
// Throws std::domain_error for n > floor(n_max), carrying the computed n_max.
EnergyLevel morse_energy(const MoleculeParams& p, int n, const AngularChannel& ch);
double morse_energy_ev(const MoleculeParams& p, int n, double e_theta);

MorseBound morse_nmax(const MoleculeParams& p, const AngularSolution& sol);

// Exact Kratzer energy, in eV; the spectrum is infinite, any n >= 0 is bound.
EnergyLevel kratzer_energy(const MoleculeParams& p, int n, const AngularChannel& ch);
double kratzer_energy_ev(const MoleculeParams& p, int n, double e_theta);

} // namespace molspec
