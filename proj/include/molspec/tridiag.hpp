#pragma once

#include <span>
#include <vector>

namespace molspec {

// Lowest k eigenvalues of a symmetric tridiagonal matrix, in increasing
// order, via Sturm-sequence bisection. The Sturm count guarantees that no
// eigenvalue below the returned ones is missed.
//
// diag has n entries, off has n-1. Throws std::invalid_argument on size
// mismatch or k out of range.
std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> off, int k,
                                       double rel_tol = 1e-13);

// Number of eigenvalues strictly below lambda (Sturm count via the LDL^T
// sign recurrence).
int eigenvalue_count_below(std::span<const double> diag,
                           std::span<const double> off, double lambda);

} // namespace molspec
