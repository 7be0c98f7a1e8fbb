#pragma once

#include <functional>
#include <vector>

#include "abckit/rng.hpp"
#include "abckit/types.hpp"

namespace abckit {

/// Point estimator used by the nested bootstrap, e.g. componentwise
/// method of moments. Must return one value per model parameter.
using PointEstimator = std::function<std::vector<double>(const Dataset&)>;

enum class BandwidthRule { Silverman };

/// One smoothed log-likelihood curve: a local-quadratic scatterplot
/// smoother with tricube weights through the (theta_hat_star_j, log kde_j)
/// pairs. Queries outside the fitted range are linearly extended.
class LoessCurve {
 public:
  LoessCurve() = default;
  LoessCurve(std::vector<double> x, std::vector<double> y, double span);

  double evaluate(double x0, bool* extrapolated = nullptr) const;
  double min_x() const { return x_.front(); }
  double max_x() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }

 private:
  double fit_at(double x0, double* slope = nullptr) const;

  std::vector<double> x_;  // ascending
  std::vector<double> y_;
  double span_ = 0.5;
  double lo_value_ = 0.0, lo_slope_ = 0.0;
  double hi_value_ = 0.0, hi_slope_ = 0.0;
};

/// Nested-bootstrap likelihood curve, one LoessCurve per parameter
/// component; the total log likelihood is the sum over components.
struct BootstrapFit {
  std::vector<LoessCurve> curves;
  std::vector<double> estimate;  // theta_hat on the original data
  bool degenerate = false;       // zero bootstrap variance (spike)

  /// Sum of component curves at theta; -inf when degenerate.
  double log_weight(const ParamVector& theta, bool* extrapolated = nullptr) const;
};

/// Two-stage nested bootstrap: J outer resamples give estimates
/// theta_hat_star_j; K inner resamples of each give a kernel density
/// estimate (Epanechnikov, Silverman bandwidth) evaluated at the original
/// estimate; a loess smoother through the J pairs is the log likelihood.
BootstrapFit fit_bootstrap_likelihood(const Dataset& data, const PointEstimator& estimator,
                                      int outer, int inner, BandwidthRule bandwidth_rule,
                                      double smoother_span, RngStream& rng);

}  // namespace abckit
