#pragma once

#include <cstddef>
#include <vector>

namespace abckit {

/// Lower Cholesky factor of a symmetric positive-definite matrix
/// (row-major m x m). Throws std::runtime_error when the matrix is not
/// positive definite.
std::vector<double> cholesky_lower(const std::vector<double>& a, std::size_t m);

/// Solves L L^T x = b given the lower factor.
std::vector<double> cholesky_solve(const std::vector<double>& chol, std::size_t m,
                                   const std::vector<double>& b);

/// Least squares fit of y on X (row-major n x p) via normal equations.
std::vector<double> ols_solve(const std::vector<double>& x, const std::vector<double>& y,
                              std::size_t p);

/// Solves a small dense symmetric system in place (Gaussian elimination
/// with partial pivoting). Throws on singularity.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, std::size_t m);

}  // namespace abckit
