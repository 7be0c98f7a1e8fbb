#pragma once

#include <stdexcept>

namespace abckit {

/// Smoothing kernel applied to a summary distance. The kernel is evaluated
/// at u = rho/bandwidth and not divided by the bandwidth: self-normalized
/// importance weights cancel constant factors.
struct SmoothKernelSpec {
  enum class Kind { Epanechnikov, Gaussian };

  Kind kind = Kind::Epanechnikov;
  double bandwidth = 1.0;

  static SmoothKernelSpec epanechnikov(double bandwidth);
  static SmoothKernelSpec gaussian(double bandwidth);
};

/// K(rho/bandwidth): Epanechnikov 0.75*(1-u^2) on |u|<1, else 0;
/// Gaussian exp(-u^2/2)/sqrt(2*pi). Non-increasing in rho >= 0.
double smooth_kernel(const SmoothKernelSpec& spec, double rho);

}  // namespace abckit
