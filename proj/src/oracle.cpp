#include "molspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "molspec/tridiag.hpp"
#include "molspec/units.hpp"

namespace molspec {

namespace {

void validate_grid(const GridSpec& g, int k) {
  if (!(g.upper > g.lower))
    throw std::invalid_argument("grid: upper must exceed lower");
  if (g.points < 64) throw std::invalid_argument("grid: points must be >= 64");
  if (k < 1 || k > g.points / 4)
    throw std::invalid_argument("grid: requested eigenvalue count exceeds points/4");
}

std::vector<double> radial_solve_once(const std::function<double(double)>& V,
                                      double mu, const GridSpec& g, int n, int k) {
  double h = (g.upper - g.lower) / (n + 1);
  double kappa = units::hbar2_over_2mu(mu);
  double t = kappa / (h * h);
  std::vector<double> diag(n), off(n - 1, -t);
  for (int i = 0; i < n; ++i) {
    double v = V(g.lower + h * (i + 1));
    if (!std::isfinite(v))
      throw std::invalid_argument("solve_radial_fd: non-finite potential sample");
    diag[i] = 2.0 * t + v;
  }
  if (g.boundary == Boundary::dirichlet_lower_neumann_upper)
    diag[n - 1] -= t; // ghost point mirrors the last interior value
  return lowest_eigenvalues(diag, off, k);
}

// Self-adjoint sin-weighted finite-volume discretization of the polar
// equation, symmetrized by similarity with sqrt(sin theta). Cell-centered
// nodes; the eigenvalue of the discrete operator is E_theta directly.
std::vector<double> angular_solve_once(double A, double B, int m,
                                       const GridSpec& g, Parity parity, int n,
                                       int k) {
  double a_tilde = static_cast<double>(m) * m + A;
  double h = (g.upper - g.lower) / n;
  std::vector<double> theta(n), s(n), sf(n + 1);
  for (int i = 0; i < n; ++i) {
    theta[i] = g.lower + h * (i + 0.5);
    s[i] = std::sin(theta[i]);
  }
  for (int i = 0; i <= n; ++i) sf[i] = std::sin(g.lower + h * i);

  std::vector<double> diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) {
    double w = a_tilde / (s[i] * s[i]);
    if (B > 0) {
      double c = std::cos(theta[i]);
      w += B / (c * c);
    }
    diag[i] = (sf[i + 1] + sf[i]) / (h * h * s[i]) + w;
  }
  for (int i = 0; i + 1 < n; ++i)
    off[i] = -sf[i + 1] / (h * h * std::sqrt(s[i] * s[i + 1]));

  // Lower end: a Dirichlet wall when the sin^-2 term is repulsive; natural
  // (zero-flux, regularity) when a_tilde == 0.
  if (a_tilde > 0)
    diag[0] = (sf[1] + 2.0 * sf[0]) / (h * h * s[0]) + a_tilde / (s[0] * s[0]) +
              (B > 0 ? B / std::pow(std::cos(theta[0]), 2) : 0.0);
  else
    diag[0] -= sf[0] / (h * h * s[0]);

  // Upper end: Dirichlet for B > 0 (cos^-2 wall) and for the odd branch at
  // pi/2; zero-flux for the even branch.
  if (B > 0 || parity == Parity::odd)
    diag[n - 1] += sf[n] / (h * h * s[n - 1]);
  else
    diag[n - 1] -= sf[n] / (h * h * s[n - 1]);

  return lowest_eigenvalues(diag, off, k);
}

OracleResult assemble(const std::function<std::vector<double>(int)>& solve_at,
                      const GridSpec& grid, int k) {
  std::vector<double> fine = solve_at(grid.points);
  std::vector<double> mid = solve_at(grid.points / 2);
  std::vector<double> coarse = solve_at(grid.points / 4);

  OracleResult res;
  res.eigenvalues = fine;
  res.grid = grid;
  res.richardson_estimate.resize(k);
  for (int i = 0; i < k; ++i)
    res.richardson_estimate[i] = (4.0 * fine[i] - mid[i]) / 3.0;

  double scale = 0;
  for (double e : fine) scale = std::max(scale, std::abs(e));
  scale = std::max(scale, 1e-30);
  std::vector<double> orders;
  for (int i = 0; i < k; ++i) {
    double d1 = std::abs(mid[i] - coarse[i]);
    double d2 = std::abs(fine[i] - mid[i]);
    if (d2 < 1e-12 * scale) continue; // converged below noise
    orders.push_back(std::log2(d1 / d2));
  }
  if (orders.empty()) {
    res.convergence_order = 2.0;
  } else {
    std::nth_element(orders.begin(), orders.begin() + orders.size() / 2,
                     orders.end());
    res.convergence_order = orders[orders.size() / 2];
  }
  return res;
}

} // namespace

OracleResult solve_radial_fd(const std::function<double(double)>& potential_ev,
                             double mu, const GridSpec& grid, int k) {
  validate_grid(grid, k);
  if (!(mu > 0)) throw std::invalid_argument("solve_radial_fd: mu must be positive");
  return assemble(
      [&](int n) { return radial_solve_once(potential_ev, mu, grid, n, k); },
      grid, k);
}

OracleResult solve_angular_fd(double A, double B, int m, const GridSpec& grid,
                              int k, Parity parity) {
  validate_grid(grid, k);
  if (A < 0 || B < 0)
    throw std::invalid_argument("solve_angular_fd: A and B must be >= 0");
  return assemble(
      [&](int n) { return angular_solve_once(A, B, m, grid, parity, n, k); },
      grid, k);
}

GridSpec default_morse_grid(double re, double a, int points) {
  return {std::max(1e-3, re - 10.0 / a), re + 25.0 / a, points,
          Boundary::dirichlet_both};
}

GridSpec default_kratzer_grid(double re, int points) {
  return {1e-3, 40.0 * re, points, Boundary::dirichlet_both};
}

GridSpec default_angular_grid(double B, int points, double eps) {
  double upper = std::numbers::pi / 2.0 - (B > 0 ? eps : 0.0);
  return {eps, upper, points, Boundary::dirichlet_both};
}

std::vector<ConvergenceRow> convergence_study(
    const std::function<std::vector<double>(const GridSpec&)>& solve,
    const std::vector<GridSpec>& grids, double tol) {
  if (grids.size() < 3)
    throw std::invalid_argument("convergence_study: need at least 3 grids");
  for (size_t i = 1; i < grids.size(); ++i)
    if (grids[i].points <= grids[i - 1].points)
      throw std::invalid_argument(
          "convergence_study: grids must have strictly increasing point counts");

  std::vector<ConvergenceRow> rows;
  for (const auto& g : grids) {
    ConvergenceRow row{g, solve(g), {}, 0.0, false};
    if (!rows.empty()) {
      const auto& prev = rows.back().eigenvalues;
      size_t k = std::min(prev.size(), row.eigenvalues.size());
      row.extrapolated.resize(k);
      for (size_t i = 0; i < k; ++i) {
        row.extrapolated[i] = (4.0 * row.eigenvalues[i] - prev[i]) / 3.0;
        if (std::abs(row.extrapolated[i] - row.eigenvalues[i]) > tol)
          row.flagged = true;
      }
      if (rows.size() >= 2) {
        const auto& prev2 = rows[rows.size() - 2].eigenvalues;
        std::vector<double> orders;
        double scale = 1e-30;
        for (size_t i = 0; i < k; ++i)
          scale = std::max(scale, std::abs(row.eigenvalues[i]));
        double ratio = static_cast<double>(g.points) /
                       rows[rows.size() - 1].grid.points;
        for (size_t i = 0; i < std::min(k, prev2.size()); ++i) {
          double d1 = std::abs(prev[i] - prev2[i]);
          double d2 = std::abs(row.eigenvalues[i] - prev[i]);
          if (d2 < 1e-12 * scale) continue;
          orders.push_back(std::log(d1 / d2) / std::log(ratio));
        }
        if (!orders.empty()) {
          std::nth_element(orders.begin(), orders.begin() + orders.size() / 2,
                           orders.end());
          row.order = orders[orders.size() / 2];
        } else {
          row.order = 2.0;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace molspec
