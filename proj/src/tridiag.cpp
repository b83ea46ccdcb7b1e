#include "molspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace molspec {

int eigenvalue_count_below(std::span<const double> diag,
                           std::span<const double> off, double lambda) {
  // LDL^T sign recurrence; negative pivots count eigenvalues below lambda.
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double d = 1.0;
  for (size_t i = 0; i < diag.size(); ++i) {
    double off2 = (i == 0) ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - lambda - off2 / d;
    if (d == 0.0) d = tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> off, int k,
                                       double rel_tol) {
  const int n = static_cast<int>(diag.size());
  if (off.size() + 1 != diag.size())
    throw std::invalid_argument("lowest_eigenvalues: off must have n-1 entries");
  if (k < 1 || k > n)
    throw std::invalid_argument("lowest_eigenvalues: k out of range");

  // Gershgorin bounds.
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
               (i < n - 1 ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  double scale = std::max({std::abs(lo), std::abs(hi), 1.0});

  std::vector<double> eigs(k);
  for (int idx = 0; idx < k; ++idx) {
    double a = (idx == 0) ? lo : eigs[idx - 1] - scale * 1e-15;
    double b = hi;
    // Invariant: count(a) <= idx < count(b).
    while (b - a > rel_tol * scale + 4.0 * std::numeric_limits<double>::epsilon() *
                                         std::max(std::abs(a), std::abs(b))) {
      double mid = 0.5 * (a + b);
      if (eigenvalue_count_below(diag, off, mid) <= idx)
        a = mid;
      else
        b = mid;
    }
    eigs[idx] = 0.5 * (a + b);
  }
  return eigs;
}

} // namespace molspec
