#pragma once

#include <memory>
#include <vector>

#include "abckit/types.hpp"

namespace abckit {

using SummaryVector = std::vector<double>;

/// Which summary statistic vector t(y) to compute.
class StatisticSpec {
 public:
  enum class Kind { Identity, Moments, Quantiles, PottsSufficient, MixedEffects };

  static StatisticSpec identity();
  static StatisticSpec moments(std::vector<int> orders);
  static StatisticSpec quantiles(std::vector<double> probs);
  /// The seven octiles i/8, i=1..7.
  static StatisticSpec octiles();
  static StatisticSpec potts_sufficient();
  static StatisticSpec mixed_effects(std::shared_ptr<const BlockDesign> design);

  Kind kind() const { return kind_; }
  const std::vector<int>& orders() const { return orders_; }
  const std::vector<double>& probs() const { return probs_; }
  const std::shared_ptr<const BlockDesign>& design() const { return design_; }

  /// Summary dimension, given the data size it will be applied to.
  std::size_t output_dim(std::size_t data_size) const;

 private:
  Kind kind_ = Kind::Identity;
  std::vector<int> orders_;
  std::vector<double> probs_;
  std::shared_ptr<const BlockDesign> design_;
};

/// t(y): deterministic, fixed length for a given spec.
/// Throws when the spec is incompatible with the data type.
SummaryVector compute_summary(const StatisticSpec& spec, const Dataset& data);

/// Number of agreeing first-order neighbor pairs on a lattice,
/// each edge counted once.
long lattice_agreement_count(const Dataset& data);

/// Per-component MAD over pilot summaries, floored at 1e-12.
/// Requires at least 20 pilots.
std::vector<double> estimate_scales(const std::vector<SummaryVector>& pilots);

}  // namespace abckit
