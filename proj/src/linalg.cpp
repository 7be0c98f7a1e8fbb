#include "abckit/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace abckit {

std::vector<double> cholesky_lower(const std::vector<double>& a, std::size_t m) {
  if (a.size() != m * m) throw std::invalid_argument("cholesky: shape mismatch");
  std::vector<double> l(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a[i * m + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * m + k] * l[j * m + k];
      if (i == j) {
        if (!(s > 0.0)) throw std::runtime_error("cholesky: matrix not positive definite");
        l[i * m + i] = std::sqrt(s);
      } else {
        l[i * m + j] = s / l[j * m + j];
      }
    }
  }
  return l;
}

std::vector<double> cholesky_solve(const std::vector<double>& chol, std::size_t m,
                                   const std::vector<double>& b) {
  if (b.size() != m) throw std::invalid_argument("cholesky_solve: shape mismatch");
  std::vector<double> x = b;
  for (std::size_t i = 0; i < m; ++i) {  // forward: L z = b
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= chol[i * m + k] * x[k];
    x[i] = s / chol[i * m + i];
  }
  for (std::size_t ii = m; ii-- > 0;) {  // backward: L^T x = z
    double s = x[ii];
    for (std::size_t k = ii + 1; k < m; ++k) s -= chol[k * m + ii] * x[k];
    x[ii] = s / chol[ii * m + ii];
  }
  return x;
}

std::vector<double> ols_solve(const std::vector<double>& x, const std::vector<double>& y,
                              std::size_t p) {
  if (p == 0 || x.size() % p != 0) throw std::invalid_argument("ols: shape mismatch");
  const std::size_t n = x.size() / p;
  if (y.size() != n) throw std::invalid_argument("ols: row count mismatch");
  std::vector<double> xtx(p * p, 0.0);
  std::vector<double> xty(p, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < p; ++a) {
      const double xa = x[i * p + a];
      xty[a] += xa * y[i];
      for (std::size_t b = 0; b <= a; ++b) xtx[a * p + b] += xa * x[i * p + b];
    }
  }
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) xtx[a * p + b] = xtx[b * p + a];
  }
  const auto l = cholesky_lower(xtx, p);
  return cholesky_solve(l, p, xty);
}

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, std::size_t m) {
  if (a.size() != m * m || b.size() != m) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(a[r * m + col]) > std::abs(a[pivot * m + col])) pivot = r;
    }
    if (a[pivot * m + col] == 0.0) throw std::runtime_error("solve: singular system");
    if (pivot != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[pivot * m + c], a[col * m + c]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r * m + col] / a[col * m + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(m);
  for (std::size_t ii = m; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t c = ii + 1; c < m; ++c) s -= a[ii * m + c] * x[c];
    x[ii] = s / a[ii * m + ii];
  }
  return x;
}

}  // namespace abckit
