#pragma once

// Quenched Gibbs statistics of the first jump s_0: backward partition
// profiles, the s_0 marginal, and quenched moments/cumulants of s_0 and its
// transforms (positive/negative part, truncation at tau).

#include <span>
#include <vector>

#include "environment.hpp"

namespace oy {

struct GibbsProfile {
    TimeGrid grid;
    double theta = 0.0;
    int n = 0;
    double t = 0.0;
    std::int64_t t_index = 0;
    std::vector<double> log_marginal;            // lw(s) over nodes 0..t_index
    double log_z = 0.0;                          // log-sum-exp(lw) + log(dt)
    std::vector<std::vector<double>> backward;   // log G_j, j = 1..n (optional)

    /// Normalized probability vector of the s_0 marginal over nodes 0..t_index.
    std::vector<double> probabilities() const;
};

GibbsProfile backward_profiles(const Environment& env, double theta, int n, double t,
                               bool keep_backward = true);

enum class Transform { identity, plus, minus, plus_min_tau, tail_indicator };

/// E^theta[f(s_0)^power] for the chosen transform; `param` is tau for
/// plus_min_tau and the threshold u for tail_indicator (which uses power 1).
double quenched_moment(const GibbsProfile& profile, Transform transform, int power,
                       double param = 0.0);

/// Standard moments-to-cumulants recursion; input m[0] = m_1, ..., m[k-1] = m_k.
std::vector<double> moments_to_cumulants(std::span<const double> moments);

/// kappa_1..kappa_k of s_0^+ (variant = plus) or s_0^+ ^ tau (plus_min_tau).
std::vector<double> quenched_cumulants(const GibbsProfile& profile, Transform variant,
                                       int k_max, double tau = 0.0);

struct ThetaDerivativeCheck {
    double residual;           // |central difference - E^theta[s_0]|
    double second_difference;  // discrete convexity: >= 0 up to rounding
};

/// Central-difference check of d/dtheta log Z = E^theta[s_0] on one
/// environment; requires n >= 1 and 0 < h < theta/4.
ThetaDerivativeCheck theta_derivative_check(const Environment& env, double theta, int n,
                                            double t, double h);

}  // namespace oy
