#pragma once

// Small statistics toolbox: two-sample Kolmogorov-Smirnov, weighted line
// fits for exponent estimation, and basic sample summaries.

#include <span>
#include <vector>

namespace oy {

struct KsResult {
    double distance = 0.0;
    double critical = 0.0;  // at the configured significance level
    bool pass = false;
};

/// Two-sample KS test; `alpha` is the significance level (e.g. 0.01).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b, double alpha);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double r2 = 0.0;
};

/// Weighted least squares of y on x with per-point standard errors sigma
/// (weights 1/sigma^2); sigma entries <= 0 fall back to equal weights.
LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> sigma);

double mean_of(std::span<const double> xs);
double variance_of(std::span<const double> xs);  // with 1/(n-1)

/// Pearson correlation of paired samples.
double correlation_of(std::span<const double> xs, std::span<const double> ys);

}  // namespace oy
