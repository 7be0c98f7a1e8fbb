#include "abckit/empirical_likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abckit/linalg.hpp"

namespace abckit {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kMaxNewtonIterations = 100;
// Convergence on the constraint residual |sum_i p_i h(y_i)| under the
// current weights, componentwise, in the internally rescaled units.
constexpr double kResidualTol = 1e-10;
}  // namespace

ConstraintSet ConstraintSet::mean() { return ConstraintSet{}; }

ConstraintSet ConstraintSet::mean_variance() {
  ConstraintSet c;
  c.kind_ = Kind::MeanVariance;
  return c;
}

void ConstraintSet::eval(double y, const ParamVector& theta, double* out) const {
  out[0] = y - theta[0];
  if (kind_ == Kind::MeanVariance) {
    const double d = y - theta[0];
    out[1] = d * d - theta[1];
  }
}

bool EmpiricalFit::feasible() const { return std::isfinite(log_el); }

EmpiricalFit fit_empirical_likelihood(const Dataset& data, const ParamVector& theta,
                                      const ConstraintSet& constraints) {
  const auto& y = data.values();
  const std::size_t n = y.size();
  const std::size_t m = constraints.dim();
  if (m > theta.dim()) {
    throw std::invalid_argument("empirical likelihood: more constraints than parameters");
  }
  if (m > n - 1) {
    throw std::invalid_argument("empirical likelihood: need n-1 >= number of constraints");
  }

  // h matrix, n x m, rescaled per constraint so Newton sees O(1) numbers.
  std::vector<double> h(n * m);
  for (std::size_t i = 0; i < n; ++i) constraints.eval(y[i], theta, &h[i * m]);

  EmpiricalFit infeasible;
  infeasible.log_el = kNegInf;

  std::vector<double> scale(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double lo = h[j], hi = h[j];
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, h[i * m + j]);
      hi = std::max(hi, h[i * m + j]);
      scale[j] = std::max(scale[j], std::abs(h[i * m + j]));
    }
    // 0 must be straddled componentwise, or it cannot be in the hull.
    // All-zero columns are satisfied by any weights.
    if (scale[j] == 0.0) {
      scale[j] = 1.0;
    } else if (lo > 0.0 || hi < 0.0) {
      return infeasible;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) h[i * m + j] /= scale[j];
  }

  const auto residual = [&](const std::vector<double>& lambda, std::vector<double>& r) {
    // r = (1/n) sum_i h_i / (1 + lambda.h_i); false when off the domain.
    std::fill(r.begin(), r.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double t = 1.0;
      for (std::size_t j = 0; j < m; ++j) t += lambda[j] * h[i * m + j];
      if (t <= 1e-300) return false;
      for (std::size_t j = 0; j < m; ++j) r[j] += h[i * m + j] / t;
    }
    for (std::size_t j = 0; j < m; ++j) r[j] /= static_cast<double>(n);
    return true;
  };
  const auto dual_value = [&](const std::vector<double>& lambda) {
    double g = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double t = 1.0;
      for (std::size_t j = 0; j < m; ++j) t += lambda[j] * h[i * m + j];
      if (t <= 1e-300) return kNegInf;
      g += std::log(t);
    }
    return g;
  };

  std::vector<double> lambda(m, 0.0);
  std::vector<double> r(m), step(m);
  double g_current = 0.0;

  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    if (!residual(lambda, r)) return infeasible;
    double rmax = 0.0;
    for (double v : r) rmax = std::max(rmax, std::abs(v));
    if (rmax < kResidualTol) {
      EmpiricalFit fit;
      fit.weights.resize(n);
      double log_el = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double t = 1.0;
        for (std::size_t j = 0; j < m; ++j) t += lambda[j] * h[i * m + j];
        fit.weights[i] = 1.0 / (static_cast<double>(n) * t);
        log_el += std::log(fit.weights[i]);
      }
      fit.log_el = log_el;
      return fit;
    }

    // Newton: (sum_i h_i h_i^T / t_i^2) step = sum_i h_i / t_i
    std::vector<double> hess(m * m, 0.0);
    std::vector<double> grad(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double t = 1.0;
      for (std::size_t j = 0; j < m; ++j) t += lambda[j] * h[i * m + j];
      const double inv = 1.0 / t;
      const double inv2 = inv * inv;
      for (std::size_t j = 0; j < m; ++j) {
        grad[j] += h[i * m + j] * inv;
        for (std::size_t k = 0; k <= j; ++k) {
          hess[j * m + k] += h[i * m + j] * h[i * m + k] * inv2;
        }
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) hess[j * m + k] = hess[k * m + j];
    }
    try {
      step = solve_dense(hess, grad, m);
    } catch (const std::runtime_error&) {
      return infeasible;
    }

    // Damped ascent on the concave dual, keeping 1 + lambda.h_i > 0.
    double alpha = 1.0;
    bool moved = false;
    std::vector<double> candidate(m);
    for (int half = 0; half < 60; ++half, alpha *= 0.5) {
      for (std::size_t j = 0; j < m; ++j) candidate[j] = lambda[j] + alpha * step[j];
      const double g_candidate = dual_value(candidate);
      if (g_candidate >= g_current && std::isfinite(g_candidate)) {
        lambda = candidate;
        g_current = g_candidate;
        moved = true;
        break;
      }
    }
    if (!moved) return infeasible;
  }
  return infeasible;
}

}  // namespace abckit
