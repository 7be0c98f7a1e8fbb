#include "abckit/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "abckit/math.hpp"

namespace abckit {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

PriorComponent PriorComponent::uniform(double lo, double hi, std::string name) {
  if (!(lo < hi)) throw std::invalid_argument("uniform prior: need lo < hi");
  return PriorComponent{Family::Uniform, lo, hi, std::move(name)};
}

PriorComponent PriorComponent::normal(double mean, double sd, std::string name) {
  if (!(sd > 0.0)) throw std::invalid_argument("normal prior: sd must be positive");
  return PriorComponent{Family::Normal, mean, sd, std::move(name)};
}

PriorComponent PriorComponent::log_normal(double mu, double sigma, std::string name) {
  if (!(sigma > 0.0)) throw std::invalid_argument("log-normal prior: sigma must be positive");
  return PriorComponent{Family::LogNormal, mu, sigma, std::move(name)};
}

double PriorComponent::sample(RngStream& rng) const {
  switch (family) {
    case Family::Uniform:
      return rng.next_uniform(a, b);
    case Family::Normal:
      return a + b * rng.next_normal();
    case Family::LogNormal:
      return std::exp(a + b * rng.next_normal());
  }
  throw std::logic_error("unreachable");
}

double PriorComponent::log_density(double x) const {
  switch (family) {
    case Family::Uniform:
      if (x < a || x > b) return kNegInf;
      return -std::log(b - a);
    case Family::Normal: {
      const double z = (x - a) / b;
      return norm_log_pdf(z) - std::log(b);
    }
    case Family::LogNormal: {
      if (!(x > 0.0)) return kNegInf;
      const double z = (std::log(x) - a) / b;
      return norm_log_pdf(z) - std::log(b) - std::log(x);
    }
  }
  throw std::logic_error("unreachable");
}

double PriorComponent::support_lo() const {
  switch (family) {
    case Family::Uniform:
      return a;
    case Family::Normal:
      return kNegInf;
    case Family::LogNormal:
      return 0.0;
  }
  throw std::logic_error("unreachable");
}

double PriorComponent::support_hi() const {
  switch (family) {
    case Family::Uniform:
      return b;
    default:
      return std::numeric_limits<double>::infinity();
  }
}

Prior::Prior(std::vector<PriorComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("Prior: needs at least one component");
  auto names = std::make_shared<std::vector<std::string>>();
  names->reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto& n = components_[i].name;
    names->push_back(n.empty() ? "theta_" + std::to_string(i + 1) : n);
  }
  names_ = std::move(names);
}

ParamVector Prior::sample(RngStream& rng) const {
  std::vector<double> values(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    values[i] = components_[i].sample(rng);
  }
  return ParamVector(std::move(values), names_);
}

double Prior::log_density(const ParamVector& theta) const {
  if (theta.dim() != components_.size()) {
    throw std::invalid_argument("Prior: parameter dimension mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    total += components_[i].log_density(theta[i]);
  }
  return total;
}

bool Prior::in_support(const ParamVector& theta) const {
  return std::isfinite(log_density(theta));
}

}  // namespace abckit
