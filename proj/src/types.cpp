#include "abckit/types.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace abckit {

ParamVector::ParamVector(std::vector<double> values,
                         std::shared_ptr<const std::vector<std::string>> names)
    : values_(std::move(values)), names_(std::move(names)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ParamVector: components must be finite");
    }
  }
  if (names_ && names_->size() != values_.size()) {
    throw std::invalid_argument("ParamVector: name count must match dimension");
  }
}

const std::string& ParamVector::name(std::size_t i) const {
  static const std::string unnamed = "";
  if (!names_ || i >= names_->size()) return unnamed;
  return (*names_)[i];
}

Dataset Dataset::continuous(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("Dataset: needs at least one observation");
  Dataset d;
  d.values_ = std::move(values);
  return d;
}

Dataset Dataset::lattice(std::vector<int> states, int rows, int cols, int num_states) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Dataset: lattice dims must be positive");
  if (num_states < 2) throw std::invalid_argument("Dataset: need at least 2 states");
  if (states.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("Dataset: state count must equal rows*cols");
  }
  for (int s : states) {
    if (s < 1 || s > num_states) {
      throw std::invalid_argument("Dataset: states must lie in {1..k}");
    }
  }
  Dataset d;
  d.states_ = std::move(states);
  d.rows_ = rows;
  d.cols_ = cols;
  d.num_states_ = num_states;
  return d;
}

std::size_t Dataset::size() const {
  return is_lattice() ? states_.size() : values_.size();
}

const std::vector<double>& Dataset::values() const {
  if (is_lattice()) throw std::logic_error("Dataset: lattice data has no real values");
  return values_;
}

const std::vector<int>& Dataset::states() const {
  if (!is_lattice()) throw std::logic_error("Dataset: continuous data has no states");
  return states_;
}

std::size_t BlockDesign::total_size() const {
  return static_cast<std::size_t>(
      std::accumulate(block_sizes.begin(), block_sizes.end(), 0));
}

void BlockDesign::validate() const {
  if (block_sizes.empty()) throw std::invalid_argument("BlockDesign: needs blocks");
  for (int j : block_sizes) {
    if (j < 1) throw std::invalid_argument("BlockDesign: block sizes must be positive");
  }
  if (num_predictors == 0) throw std::invalid_argument("BlockDesign: needs predictors");
  if (predictors.size() != total_size() * num_predictors) {
    throw std::invalid_argument("BlockDesign: predictor matrix shape mismatch");
  }
}

}  // namespace abckit
