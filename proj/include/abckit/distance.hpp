#pragma once

#include <vector>

#include "abckit/summary.hpp"

namespace abckit {

/// Distance rho between summary vectors: plain Euclidean, or Euclidean
/// after dividing each component by a positive scale.
struct DistanceSpec {
  enum class Kind { Euclidean, ScaledEuclidean };

  Kind kind = Kind::Euclidean;
  std::vector<double> scale;  // per-component divisors (ScaledEuclidean)

  static DistanceSpec euclidean();
  /// Empty scale means "estimate from a pilot run" (filled in by the sampler).
  static DistanceSpec scaled_euclidean(std::vector<double> scale = {});
};

double distance(const DistanceSpec& spec, const SummaryVector& a, const SummaryVector& b);

}  // namespace abckit
