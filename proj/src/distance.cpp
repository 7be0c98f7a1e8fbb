#include "abckit/distance.hpp"

#include <cmath>
#include <stdexcept>

namespace abckit {

DistanceSpec DistanceSpec::euclidean() { return DistanceSpec{Kind::Euclidean, {}}; }

DistanceSpec DistanceSpec::scaled_euclidean(std::vector<double> scale) {
  for (double s : scale) {
    if (!(s > 0.0)) throw std::invalid_argument("distance: scales must be strictly positive");
  }
  return DistanceSpec{Kind::ScaledEuclidean, std::move(scale)};
}

double distance(const DistanceSpec& spec, const SummaryVector& a, const SummaryVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distance: length mismatch");
  double sum = 0.0;
  if (spec.kind == DistanceSpec::Kind::ScaledEuclidean) {
    if (spec.scale.size() != a.size()) {
      throw std::invalid_argument("distance: scale length mismatch");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = (a[i] - b[i]) / spec.scale[i];
      sum += d * d;
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

}  // namespace abckit
