#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace abckit {

/// A point in parameter space, with optional shared component names.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<double> values,
                       std::shared_ptr<const std::vector<std::string>> names = nullptr);

  std::size_t dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& name(std::size_t i) const;
  std::shared_ptr<const std::vector<std::string>> names() const { return names_; }

 private:
  std::vector<double> values_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Observed or simulated data: a real-valued sample, or a lattice of
/// discrete states in {1..k} for Markov random field models.
class Dataset {
 public:
  Dataset() = default;

  static Dataset continuous(std::vector<double> values);
  static Dataset lattice(std::vector<int> states, int rows, int cols, int num_states);

  bool is_lattice() const { return num_states_ > 0; }
  std::size_t size() const;

  const std::vector<double>& values() const;
  const std::vector<int>& states() const;
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_states() const { return num_states_; }

  bool operator==(const Dataset&) const = default;

 private:
  std::vector<double> values_;
  std::vector<int> states_;
  int rows_ = 0;
  int cols_ = 0;
  int num_states_ = 0;
};

/// Fixed-effect design shared by the mixed-effects simulator and its
/// summary statistics: per-block sizes and an n-by-p predictor matrix.
struct BlockDesign {
  std::vector<int> block_sizes;     // J_k, one per block
  std::vector<double> predictors;   // row-major n x p
  std::size_t num_predictors = 0;   // p

  std::size_t total_size() const;   // n = sum J_k
  double x(std::size_t row, std::size_t col) const {
    return predictors[row * num_predictors + col];
  }
  void validate() const;
};

}  // namespace abckit
