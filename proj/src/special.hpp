#pragma once

// Special functions and reference distributions: polygamma psi_k, generalized
// Hermite polynomials H_{k,t}, and log(1/X_theta) sampling for the gamma
// reference law of the boundary increments.

#include <vector>

#include "rng.hpp"

namespace oy {

inline constexpr int kPolygammaMaxOrder = 12;

/// psi_k(theta): k-th derivative of digamma for k >= 1, digamma itself for
/// k = 0. Upward recurrence to a large argument followed by the asymptotic
/// series; relative accuracy ~1e-13 over the supported range.
double polygamma(int k, double theta);

struct PolygammaTable {
    double theta = 0.0;
    std::vector<double> values;  // psi_0(theta) .. psi_K(theta)
};

PolygammaTable polygamma_table(double theta, int k_max);

/// Generalized Hermite polynomial H_{k,t}(x) with variance parameter t > 0,
/// normalized by the generating function exp(l*x - l^2 t/2) = sum l^k/k! H_{k,t}(x).
double hermite(int k, double t, double x);

/// One draw of log(1/X) with X ~ Gamma(shape theta, rate 1).
double sample_log_inverse_gamma(double theta, RngStream& rng);

}  // namespace oy
