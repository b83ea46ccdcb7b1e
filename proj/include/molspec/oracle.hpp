#pragma once

// Independent verification engine: finite-difference diagonalization of the
// radial and angular one-dimensional eigenproblems, with grid-convergence
// estimation. Every closed-form eigenvalue in this project is cross-checked
// against these solvers.

#include <functional>
#include <vector>

#include "molspec/angular.hpp"

namespace molspec {

enum class Boundary { dirichlet_both, dirichlet_lower_neumann_upper };

struct GridSpec {
  double lower = 0;
  double upper = 1;
  int points = 1024; // interior grid points, >= 64
  Boundary boundary = Boundary::dirichlet_both;
};

struct OracleResult {
  std::vector<double> eigenvalues;          // lowest k, strictly increasing
  GridSpec grid;
  std::vector<double> richardson_estimate;  // extrapolated from points/2 and points
  double convergence_order = 0;             // observed, from points/4, points/2, points
};

// Lowest k eigenvalues of -(hbar^2/2mu) d^2/dr^2 + V(r) on [lower, upper]
// with the grid's boundary conditions. V is in eV, r in Angstrom, mu in amu.
OracleResult solve_radial_fd(const std::function<double(double)>& potential_ev,
                             double mu, const GridSpec& grid, int k);

// Lowest k eigenvalues E_theta of the polar equation with the ring-shaped
// potential, discretized in self-adjoint (sin-weighted finite-volume) form.
// The grid spans theta in (grid.lower, grid.upper); for B > 0 both walls are
// Dirichlet, for B == 0 the upper end at pi/2 is Neumann (even parity) or
// Dirichlet (odd parity).
OracleResult solve_angular_fd(double A, double B, int m, const GridSpec& grid,
                              int k, Parity parity = Parity::even);

// Default solve domains.
GridSpec default_morse_grid(double re, double a, int points = 2048);
GridSpec default_kratzer_grid(double re, int points = 4096);
GridSpec default_angular_grid(double B, int points = 2048, double eps = 1e-4);

struct ConvergenceRow {
  GridSpec grid;
  std::vector<double> eigenvalues;
  std::vector<double> extrapolated; // vs the previous grid; empty on the first row
  double order;                     // observed vs the two previous grids; 0 on the first two
  bool flagged;                     // extrapolated change exceeded the tolerance
};

// Runs the supplied solver over >= 3 grids of strictly increasing resolution
// and reports per-grid eigenvalues, Richardson extrapolations and observed
// orders. Throws std::invalid_argument for fewer than 3 grids or
// non-increasing point counts.
std::vector<ConvergenceRow> convergence_study(
    const std::function<std::vector<double>(const GridSpec&)>& solve,
    const std::vector<GridSpec>& grids, double tol);

} // namespace molspec
