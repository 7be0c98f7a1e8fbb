#include "abckit/bootstrap_likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "abckit/linalg.hpp"
#include "abckit/math.hpp"

namespace abckit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double silverman_bandwidth(std::vector<double> values) {
  const std::size_t k = values.size();
  const double sd = std::sqrt(variance(values));
  std::sort(values.begin(), values.end());
  const double iqr = quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
  double spread = sd;
  if (iqr > 0.0) spread = std::min(spread, iqr / 1.34);
  return 0.9 * spread * std::pow(static_cast<double>(k), -0.2);
}

// Epanechnikov KDE of `samples` at x, proper density normalization.
double kde_at(const std::vector<double>& samples, double x, double h) {
  double s = 0.0;
  for (double v : samples) {
    const double u = (x - v) / h;
    if (std::abs(u) < 1.0) s += 0.75 * (1.0 - u * u);
  }
  return s / (static_cast<double>(samples.size()) * h);
}

}  // namespace

LoessCurve::LoessCurve(std::vector<double> x, std::vector<double> y, double span)
    : x_(std::move(x)), y_(std::move(y)), span_(span) {
  if (x_.size() != y_.size() || x_.size() < 4) {
    throw std::invalid_argument("loess: need at least 4 points");
  }
  if (!(span_ > 0.0 && span_ <= 1.0)) throw std::invalid_argument("loess: span in (0,1]");
  std::vector<std::size_t> order(x_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x_[a] < x_[b]; });
  std::vector<double> xs(x_.size()), ys(y_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    xs[i] = x_[order[i]];
    ys[i] = y_[order[i]];
  }
  x_ = std::move(xs);
  y_ = std::move(ys);
  lo_value_ = fit_at(x_.front(), &lo_slope_);
  hi_value_ = fit_at(x_.back(), &hi_slope_);
}

double LoessCurve::fit_at(double x0, double* slope) const {
  const std::size_t n = x_.size();
  const std::size_t q =
      std::min(n, std::max<std::size_t>(4, static_cast<std::size_t>(
                                               std::ceil(span_ * static_cast<double>(n)))));

  // Window of the q nearest points (x_ ascending).
  std::size_t lo = std::distance(
      x_.begin(), std::lower_bound(x_.begin(), x_.end(), x0));
  std::size_t left = (lo > 0) ? lo - 1 : 0;
  std::size_t right = std::min(lo, n - 1);
  auto width = [&](std::size_t l, std::size_t r) {
    return std::max(std::abs(x_[l] - x0), std::abs(x_[r] - x0));
  };
  while (right - left + 1 < q) {
    if (left == 0) {
      ++right;
    } else if (right == n - 1) {
      --left;
    } else if (std::abs(x_[left - 1] - x0) <= std::abs(x_[right + 1] - x0)) {
      --left;
    } else {
      ++right;
    }
  }
  double dmax = width(left, right);
  if (dmax <= 0.0) {  // all window points coincide with x0
    double s = 0.0;
    for (std::size_t i = left; i <= right; ++i) s += y_[i];
    if (slope) *slope = 0.0;
    return s / static_cast<double>(right - left + 1);
  }

  // Weighted quadratic in (x - x0); the intercept is the fitted value.
  std::vector<double> ata(9, 0.0), atb(3, 0.0);
  for (std::size_t i = left; i <= right; ++i) {
    const double d = std::abs(x_[i] - x0) / dmax;
    if (d >= 1.0) continue;
    const double t = 1.0 - d * d * d;
    const double w = t * t * t;
    const double dx = x_[i] - x0;
    const double row[3] = {1.0, dx, dx * dx};
    for (int a = 0; a < 3; ++a) {
      atb[a] += w * row[a] * y_[i];
      for (int b = 0; b <= a; ++b) ata[a * 3 + b] += w * row[a] * row[b];
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) ata[a * 3 + b] = ata[b * 3 + a];
  }
  // Quadratic, then linear, then constant when the window is rank deficient.
  try {
    if (ata[0] <= 0.0) throw std::runtime_error("empty window");
    const auto beta = solve_dense(ata, atb, 3);
    if (std::isfinite(beta[0]) && std::isfinite(beta[1])) {
      if (slope) *slope = beta[1];
      return beta[0];
    }
  } catch (const std::runtime_error&) {
  }
  try {
    std::vector<double> ata2 = {ata[0], ata[1], ata[3], ata[4]};
    std::vector<double> atb2 = {atb[0], atb[1]};
    const auto beta = solve_dense(ata2, atb2, 2);
    if (std::isfinite(beta[0])) {
      if (slope) *slope = beta[1];
      return beta[0];
    }
  } catch (const std::runtime_error&) {
  }
  if (slope) *slope = 0.0;
  return ata[0] > 0.0 ? atb[0] / ata[0] : y_[left];
}

double LoessCurve::evaluate(double x0, bool* extrapolated) const {
  if (extrapolated) *extrapolated = false;
  if (x0 < x_.front()) {
    if (extrapolated) *extrapolated = true;
    return lo_value_ + lo_slope_ * (x0 - x_.front());
  }
  if (x0 > x_.back()) {
    if (extrapolated) *extrapolated = true;
    return hi_value_ + hi_slope_ * (x0 - x_.back());
  }
  return fit_at(x0);
}

double BootstrapFit::log_weight(const ParamVector& theta, bool* extrapolated) const {
  if (degenerate) {
    if (extrapolated) *extrapolated = false;
    return kNegInf;
  }
  if (theta.dim() != curves.size()) {
    throw std::invalid_argument("bootstrap likelihood: parameter dimension mismatch");
  }
  double total = 0.0;
  bool any_extrapolated = false;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    bool ex = false;
    total += curves[c].evaluate(theta[c], &ex);
    any_extrapolated = any_extrapolated || ex;
  }
  if (extrapolated) *extrapolated = any_extrapolated;
  return total;
}

BootstrapFit fit_bootstrap_likelihood(const Dataset& data, const PointEstimator& estimator,
                                      int outer, int inner, BandwidthRule /*bandwidth_rule*/,
                                      double smoother_span, RngStream& rng) {
  if (outer < 10) throw std::invalid_argument("bootstrap likelihood: need outer >= 10");
  if (inner < 100) throw std::invalid_argument("bootstrap likelihood: need inner >= 100");
  const auto& y = data.values();
  const std::size_t n = y.size();

  BootstrapFit fit;
  fit.estimate = estimator(data);
  const std::size_t dim = fit.estimate.size();

  const std::size_t j_count = static_cast<std::size_t>(outer);
  const std::size_t k_count = static_cast<std::size_t>(inner);

  // Stage 1: J outer resamples and their estimates.
  std::vector<std::vector<double>> outer_samples(j_count, std::vector<double>(n));
  std::vector<std::vector<double>> outer_estimates(j_count);
  for (std::size_t j = 0; j < j_count; ++j) {
    auto& sample = outer_samples[j];
    for (std::size_t i = 0; i < n; ++i) sample[i] = y[rng.next_index(n)];
    outer_estimates[j] = estimator(Dataset::continuous(sample));
    if (outer_estimates[j].size() != dim) {
      throw std::invalid_argument("bootstrap likelihood: estimator dimension changed");
    }
  }

  // Stage 2: per outer resample, K inner estimates and a KDE at the
  // original estimate, componentwise.
  std::vector<std::vector<double>> log_density(dim, std::vector<double>(j_count, kNegInf));
  std::vector<double> resample(n);
  std::vector<std::vector<double>> inner_estimates(dim, std::vector<double>(k_count));
  for (std::size_t j = 0; j < j_count; ++j) {
    const auto& pool = outer_samples[j];
    for (std::size_t k = 0; k < k_count; ++k) {
      for (std::size_t i = 0; i < n; ++i) resample[i] = pool[rng.next_index(n)];
      const auto est = estimator(Dataset::continuous(resample));
      for (std::size_t c = 0; c < dim; ++c) inner_estimates[c][k] = est[c];
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const double h = silverman_bandwidth(inner_estimates[c]);
      if (!(h > 0.0)) continue;  // zero bootstrap spread, pair dropped
      const double f = kde_at(inner_estimates[c], fit.estimate[c], h);
      if (f > 0.0) log_density[c][j] = std::log(f);
    }
  }

  // Smooth the finite pairs per component.
  fit.curves.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<double> xs, ys;
    xs.reserve(j_count);
    ys.reserve(j_count);
    for (std::size_t j = 0; j < j_count; ++j) {
      if (std::isfinite(log_density[c][j])) {
        xs.push_back(outer_estimates[j][c]);
        ys.push_back(log_density[c][j]);
      }
    }
    const auto [xmin, xmax] = xs.empty()
                                  ? std::pair<double, double>{0.0, 0.0}
                                  : std::pair<double, double>{
                                        *std::min_element(xs.begin(), xs.end()),
                                        *std::max_element(xs.begin(), xs.end())};
    if (xs.size() < std::max<std::size_t>(5, j_count / 5) || !(xmax > xmin)) {
      fit.degenerate = true;
      return fit;
    }
    fit.curves[c] = LoessCurve(std::move(xs), std::move(ys), smoother_span);
  }
  return fit;
}

}  // namespace abckit
