#include "abckit/kernels.hpp"

#include <cmath>

#include "abckit/math.hpp"

namespace abckit {

SmoothKernelSpec SmoothKernelSpec::epanechnikov(double bandwidth) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("kernel: bandwidth must be positive");
  return SmoothKernelSpec{Kind::Epanechnikov, bandwidth};
}

SmoothKernelSpec SmoothKernelSpec::gaussian(double bandwidth) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("kernel: bandwidth must be positive");
  return SmoothKernelSpec{Kind::Gaussian, bandwidth};
}

double smooth_kernel(const SmoothKernelSpec& spec, double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("smooth_kernel: rho must be >= 0");
  const double u = rho / spec.bandwidth;
  switch (spec.kind) {
    case SmoothKernelSpec::Kind::Epanechnikov:
      return (u < 1.0) ? 0.75 * (1.0 - u * u) : 0.0;
    case SmoothKernelSpec::Kind::Gaussian:
      return norm_pdf(u);
  }
  return 0.0;
}

}  // namespace abckit
