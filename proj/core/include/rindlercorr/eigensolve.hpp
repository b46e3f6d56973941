#pragma once

#include <span>
#include <vector>

#include "rindlercorr/matrix.hpp"

namespace rindler {

/// Result of a dense symmetric eigensolve. Eigenvalues are sorted ascending;
/// column k of `vectors` is the eigenvector of `values[k]`. `residual` is the
/// largest ||A v_k - lambda_k v_k||_2, measured against the input matrix.
struct EigenSolution {
  std::vector<double> values;
  Matrix vectors;
  double residual = 0.0;
};

/// Cyclic Jacobi rotations on a dense symmetric matrix. Converges when the
/// off-diagonal Frobenius norm drops below 1e-14 times the matrix norm.
/// Throws std::invalid_argument on a non-square input.
EigenSolution jacobi_eigensystem(const Matrix& a, int max_sweeps = 100);

/// Eigenvalues of a symmetric tridiagonal matrix (diag size n, off size n-1)
/// by Sturm-sequence bisection, ascending.
std::vector<double> tridiag_eigenvalues(std::span<const double> diag,
                                        std::span<const double> off);

/// Number of eigenvalues of the tridiagonal matrix strictly below x.
int tridiag_count_below(std::span<const double> diag,
                        std::span<const double> off, double x);

/// Sum of |lambda| over eigenvalues lambda <= -threshold, locating only the
/// negative part of the spectrum. Used on block matrices whose dimension
/// makes a full dense solve wasteful.
double tridiag_negative_sum(std::span<const double> diag,
                            std::span<const double> off, double threshold);

}  // namespace rindler
