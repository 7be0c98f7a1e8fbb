#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace abckit {

/// Standard normal quantile function (inverse CDF), Wichura's AS 241
/// rational approximation (relative error below 1e-9 over (0,1)).
/// Throws std::domain_error for p outside (0,1).
double norm_quantile(double p);

double norm_cdf(double x);
double norm_pdf(double x);
double norm_log_pdf(double x);

/// Empirical quantile with linear interpolation between order statistics
/// (the sorted grid maps index i to probability i/(n-1)).
/// `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double p);

/// Convenience: copies, sorts, interpolates.
double quantile(std::vector<double> values, double p);

double median(std::vector<double> values);

/// Median absolute deviation around the median (unscaled).
double mad(std::vector<double> values);

double mean(std::span<const double> values);
double variance(std::span<const double> values);  // divisor n-1

}  // namespace abckit
