#pragma once

#include <string>
#include <vector>

#include "abckit/rng.hpp"
#include "abckit/types.hpp"

namespace abckit {

/// One independent prior component: uniform(lo,hi), normal(mean,sd) or
/// log-normal(mu,sigma) on the log scale.
struct PriorComponent {
  enum class Family { Uniform, Normal, LogNormal };

  Family family = Family::Uniform;
  double a = 0.0;  // uniform lo / normal mean / log-normal mu
  double b = 1.0;  // uniform hi / normal sd / log-normal sigma
  std::string name;

  static PriorComponent uniform(double lo, double hi, std::string name = "");
  static PriorComponent normal(double mean, double sd, std::string name = "");
  static PriorComponent log_normal(double mu, double sigma, std::string name = "");

  double sample(RngStream& rng) const;
  double log_density(double x) const;  // -inf off support
  double support_lo() const;
  double support_hi() const;
};

/// Product prior over independent components.
class Prior {
 public:
  explicit Prior(std::vector<PriorComponent> components);

  std::size_t dim() const { return components_.size(); }
  const PriorComponent& component(std::size_t i) const { return components_[i]; }
  const std::vector<PriorComponent>& components() const { return components_; }

  ParamVector sample(RngStream& rng) const;

  /// Sum of component log densities; -inf if any component is off support.
  /// Throws on dimension mismatch.
  double log_density(const ParamVector& theta) const;

  bool in_support(const ParamVector& theta) const;

 private:
  std::vector<PriorComponent> components_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace abckit
