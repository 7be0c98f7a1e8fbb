#pragma once

#include <vector>

#include "abckit/types.hpp"

namespace abckit {

/// Moment constraints E_F[h(Y, theta)] = 0 defining the empirical
/// likelihood. Two builtin sets:
///   Mean:         h1 = y - theta_1
///   MeanVariance: h1 = y - theta_1,  h2 = (y - theta_1)^2 - theta_2
class ConstraintSet {
 public:
  enum class Kind { Mean, MeanVariance };

  static ConstraintSet mean();
  static ConstraintSet mean_variance();

  Kind kind() const { return kind_; }
  std::size_t dim() const { return kind_ == Kind::Mean ? 1 : 2; }

  void eval(double y, const ParamVector& theta, double* out) const;

 private:
  Kind kind_ = Kind::Mean;
};

/// Profile weights p maximizing sum log p_i subject to sum p_i = 1 and
/// sum p_i h(y_i, theta) = 0, plus the attained log empirical likelihood.
/// log_el is -inf when 0 lies outside the convex hull of {h(y_i, theta)}.
struct EmpiricalFit {
  std::vector<double> weights;
  double log_el = 0.0;

  bool feasible() const;
};

/// Solves the Lagrange dual with a damped Newton iteration (step halving,
/// at most 100 iterations). Non-convergence is reported as log_el = -inf,
/// not as an exception.
EmpiricalFit fit_empirical_likelihood(const Dataset& data, const ParamVector& theta,
                                      const ConstraintSet& constraints);

}  // namespace abckit
