#pragma once

#include <variant>
#include <vector>

#include "abckit/bootstrap_likelihood.hpp"
#include "abckit/distance.hpp"
#include "abckit/empirical_likelihood.hpp"
#include "abckit/kernels.hpp"
#include "abckit/simulator.hpp"
#include "abckit/summary.hpp"

namespace abckit {

// ---------------------------------------------------------------------------
// Surrogate-likelihood families. Each produces an unnormalized weight
// K(t(y) | eta_hat) for a proposed parameter.
// ---------------------------------------------------------------------------

struct RejectionKind {
  double epsilon = 0.0;  // >= 0; indicator 1(rho <= epsilon)
};

struct KernelKind {
  SmoothKernelSpec kernel;  // smooth K(rho), no tolerance
};

struct CoupledKind {
  double epsilon = 0.0;
  int coupling_draws = 1;  // M shared u-draws, fixed across all theta
};

struct SyntheticNormalKind {
  int num_synthetic = 40;  // N >= 2 synthetic data sets per iteration
  double ridge = 1e-8;
};

struct EmpiricalKind {
  ConstraintSet constraints;
};

struct BootstrapKind {
  int outer = 50;    // J >= 10
  int inner = 1000;  // K >= 100
  BandwidthRule bandwidth_rule = BandwidthRule::Silverman;
  double smoother_span = 0.5;
};

using SurrogateKind = std::variant<RejectionKind, KernelKind, CoupledKind, SyntheticNormalKind,
                                   EmpiricalKind, BootstrapKind>;

/// Throws std::invalid_argument on parameter-range violations.
void validate(const SurrogateKind& kind);

const char* surrogate_name(const SurrogateKind& kind);

/// Synthetic datasets drawn per iteration for each family
/// (rejection/kernel 1; coupled/EL/BL 0; SL its own N).
int synthetic_sets_per_iteration(const SurrogateKind& kind);

bool uses_tolerance(const SurrogateKind& kind);

// ---------------------------------------------------------------------------
// Per-theta fitted state.
// ---------------------------------------------------------------------------

struct DistanceFit {
  double rho = 0.0;  // summary distance of the single synthetic set
};

struct CoupledFit {
  double accept_fraction = 0.0;  // mean indicator over the M couplings
};

struct SyntheticNormalFit {
  std::size_t dim = 0;
  std::vector<double> mean;
  std::vector<double> covariance;  // row-major dim x dim, after ridge
  std::vector<double> chol;        // lower Cholesky factor
  double log_det = 0.0;            // log |covariance|
};

using FittedSurrogate =
    std::variant<DistanceFit, CoupledFit, SyntheticNormalFit, EmpiricalFit, BootstrapFit>;

// ---------------------------------------------------------------------------
// Weight kernels.
// ---------------------------------------------------------------------------

/// 1(rho <= epsilon), boundary inclusive.
double weight_rejection(double epsilon, double rho);

/// Smooth kernel of the distance.
double weight_kernel_smooth(const SmoothKernelSpec& spec, double rho);

/// Monte Carlo estimate of the coupling-marginalized indicator kernel:
/// mean over the shared u-draws of 1(rho(t(y), t(z(u,theta))) <= epsilon).
/// Throws when the model exposes no coupling.
double weight_coupled(const Simulator& model, const ParamVector& theta,
                      const std::vector<std::vector<double>>& u_draws, double epsilon,
                      const SummaryVector& observed_summary, const StatisticSpec& stat,
                      const DistanceSpec& dist);

/// MLE mean and covariance (divisor N) of the synthetic summaries, with a
/// trace-scaled ridge keeping the covariance positive definite.
SyntheticNormalFit fit_synthetic_normal(const std::vector<SummaryVector>& summaries,
                                        double ridge);

/// Multivariate normal density of the observed summary under the fit.
double weight_synthetic_normal(const SyntheticNormalFit& fit, const SummaryVector& observed);
double log_weight_synthetic_normal(const SyntheticNormalFit& fit, const SummaryVector& observed);

/// Kind-specific dispatch; log domain (EL and BL weights can underflow).
double log_weight_from_surrogate(const SurrogateKind& kind, const FittedSurrogate& fit,
                                 const ParamVector& theta, const SummaryVector& observed);

/// Plain-domain dispatch: exp of the log weight, underflow mapped to 0.
double weight_from_surrogate(const SurrogateKind& kind, const FittedSurrogate& fit,
                             const ParamVector& theta, const SummaryVector& observed);

}  // namespace abckit
