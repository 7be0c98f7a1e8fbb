#include "abckit/summary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abckit/linalg.hpp"
#include "abckit/math.hpp"

namespace abckit {

StatisticSpec StatisticSpec::identity() { return StatisticSpec{}; }

StatisticSpec StatisticSpec::moments(std::vector<int> orders) {
  if (orders.empty()) throw std::invalid_argument("moments: needs at least one order");
  for (int r : orders) {
    if (r < 1) throw std::invalid_argument("moments: orders must be >= 1");
  }
  StatisticSpec s;
  s.kind_ = Kind::Moments;
  s.orders_ = std::move(orders);
  return s;
}

StatisticSpec StatisticSpec::quantiles(std::vector<double> probs) {
  if (probs.empty()) throw std::invalid_argument("quantiles: needs at least one probability");
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantiles: probs must lie in [0,1]");
  }
  StatisticSpec s;
  s.kind_ = Kind::Quantiles;
  s.probs_ = std::move(probs);
  return s;
}

StatisticSpec StatisticSpec::octiles() {
  std::vector<double> probs(7);
  for (int i = 1; i <= 7; ++i) probs[i - 1] = i / 8.0;
  return quantiles(std::move(probs));
}

StatisticSpec StatisticSpec::potts_sufficient() {
  StatisticSpec s;
  s.kind_ = Kind::PottsSufficient;
  return s;
}

StatisticSpec StatisticSpec::mixed_effects(std::shared_ptr<const BlockDesign> design) {
  if (!design) throw std::invalid_argument("mixed_effects: design required");
  design->validate();
  StatisticSpec s;
  s.kind_ = Kind::MixedEffects;
  s.design_ = std::move(design);
  return s;
}

std::size_t StatisticSpec::output_dim(std::size_t data_size) const {
  switch (kind_) {
    case Kind::Identity:
      return data_size;
    case Kind::Moments:
      return orders_.size();
    case Kind::Quantiles:
      return probs_.size();
    case Kind::PottsSufficient:
      return 1;
    case Kind::MixedEffects:
      return 3 + design_->num_predictors;
  }
  throw std::logic_error("unreachable");
}

namespace {

SummaryVector moments_of(const std::vector<double>& y, const std::vector<int>& orders) {
  SummaryVector out;
  out.reserve(orders.size());
  const double n = static_cast<double>(y.size());
  for (int r : orders) {
    double s = 0.0;
    for (double v : y) s += std::pow(v, r);
    out.push_back(s / n);
  }
  return out;
}

SummaryVector quantiles_of(const std::vector<double>& y, const std::vector<double>& probs) {
  std::vector<double> sorted = y;
  std::sort(sorted.begin(), sorted.end());
  SummaryVector out;
  out.reserve(probs.size());
  for (double p : probs) out.push_back(quantile_sorted(sorted, p));
  return out;
}

// Grand mean, between-block variance of block means, pooled within-block
// variance, then the OLS coefficients of y on the design predictors.
SummaryVector mixed_effects_of(const std::vector<double>& y, const BlockDesign& design) {
  const std::size_t n = design.total_size();
  if (y.size() != n) throw std::invalid_argument("mixed_effects summary: data size mismatch");

  const std::size_t num_blocks = design.block_sizes.size();
  std::vector<double> block_means(num_blocks, 0.0);
  double grand = 0.0;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < num_blocks; ++k) {
    const std::size_t jk = static_cast<std::size_t>(design.block_sizes[k]);
    double s = 0.0;
    for (std::size_t j = 0; j < jk; ++j) s += y[offset + j];
    block_means[k] = s / static_cast<double>(jk);
    grand += s;
    offset += jk;
  }
  grand /= static_cast<double>(n);

  double between = 0.0;
  for (double m : block_means) between += (m - grand) * (m - grand);
  between = (num_blocks > 1) ? between / static_cast<double>(num_blocks - 1) : 0.0;

  double within = 0.0;
  offset = 0;
  for (std::size_t k = 0; k < num_blocks; ++k) {
    const std::size_t jk = static_cast<std::size_t>(design.block_sizes[k]);
    for (std::size_t j = 0; j < jk; ++j) {
      const double r = y[offset + j] - block_means[k];
      within += r * r;
    }
    offset += jk;
  }
  within = (n > num_blocks) ? within / static_cast<double>(n - num_blocks) : 0.0;

  const std::vector<double> beta = ols_solve(design.predictors, y, design.num_predictors);

  SummaryVector out;
  out.reserve(3 + beta.size());
  out.push_back(grand);
  out.push_back(between);
  out.push_back(within);
  out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

}  // namespace

long lattice_agreement_count(const Dataset& data) {
  if (!data.is_lattice()) {
    throw std::invalid_argument("lattice_agreement_count: needs lattice data");
  }
  const auto& s = data.states();
  const int rows = data.rows();
  const int cols = data.cols();
  long count = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = s[static_cast<std::size_t>(r) * cols + c];
      if (c + 1 < cols && s[static_cast<std::size_t>(r) * cols + c + 1] == v) ++count;
      if (r + 1 < rows && s[static_cast<std::size_t>(r + 1) * cols + c] == v) ++count;
    }
  }
  return count;
}

SummaryVector compute_summary(const StatisticSpec& spec, const Dataset& data) {
  switch (spec.kind()) {
    case StatisticSpec::Kind::PottsSufficient:
      return {static_cast<double>(lattice_agreement_count(data))};
    case StatisticSpec::Kind::Identity: {
      if (data.is_lattice()) {
        SummaryVector out;
        out.reserve(data.size());
        for (int v : data.states()) out.push_back(static_cast<double>(v));
        return out;
      }
      return data.values();
    }
    case StatisticSpec::Kind::Moments:
      return moments_of(data.values(), spec.orders());
    case StatisticSpec::Kind::Quantiles:
      return quantiles_of(data.values(), spec.probs());
    case StatisticSpec::Kind::MixedEffects:
      return mixed_effects_of(data.values(), *spec.design());
  }
  throw std::logic_error("unreachable");
}

std::vector<double> estimate_scales(const std::vector<SummaryVector>& pilots) {
  if (pilots.size() < 20) {
    throw std::invalid_argument("estimate_scales: need at least 20 pilot summaries");
  }
  const std::size_t m = pilots.front().size();
  std::vector<double> scales(m);
  std::vector<double> component(pilots.size());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < pilots.size(); ++i) component[i] = pilots[i][j];
    scales[j] = std::max(mad(component), 1e-12);
  }
  return scales;
}

}  // namespace abckit
