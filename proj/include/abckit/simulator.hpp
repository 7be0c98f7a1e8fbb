#pragma once

#include <span>
#include <stdexcept>

#include "abckit/rng.hpp"
#include "abckit/types.hpp"

namespace abckit {

/// Generative model interface. simulate() must be a pure function of
/// (theta, stream state): identical inputs give identical datasets.
class Simulator {
 public:
  virtual ~Simulator() = default;

  virtual std::size_t param_dim() const = 0;
  virtual std::size_t data_size() const = 0;
  virtual Dataset simulate(const ParamVector& theta, RngStream& rng) const = 0;

  /// Models with an explicit inverse-CDF representation expose the
  /// deterministic map z = f(theta, u), u in (0,1)^coupling_dim.
  /// coupling_dim() == 0 means the model has no such map.
  virtual std::size_t coupling_dim() const { return 0; }
  virtual Dataset simulate_coupled(const ParamVector& /*theta*/,
                                   std::span<const double> /*u*/) const {
    throw std::logic_error("simulator does not expose a coupling");
  }
};

}  // namespace abckit
