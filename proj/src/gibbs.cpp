#include "gibbs.hpp"

#include <cmath>
#include <stdexcept>

#include "logsum.hpp"
#include "partition.hpp"

namespace oy {

std::vector<double> GibbsProfile::probabilities() const {
    std::vector<double> p(log_marginal.size());
    double max = kNegInf;
    for (double lw : log_marginal)
        if (lw > max) max = lw;
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::exp(log_marginal[i] - max);
        total += p[i];
    }
    for (double& x : p) x /= total;
    return p;
}

GibbsProfile backward_profiles(const Environment& env, double theta, int n, double t,
                               bool keep_backward) {
    if (!(theta > 0.0)) throw std::domain_error("backward_profiles requires theta > 0");
    if (n < 1) throw std::invalid_argument("backward_profiles requires n >= 1");
    if (env.levels < n) throw std::invalid_argument("environment has fewer than n+1 paths");

    const TimeGrid& grid = env.grid;
    const std::int64_t m_t = grid.index_of(t);
    const double log_dt = std::log(grid.step());

    GibbsProfile profile;
    profile.grid = grid;
    profile.theta = theta;
    profile.n = n;
    profile.t = grid.node(m_t);
    profile.t_index = m_t;
    if (keep_backward) profile.backward.resize(n);

    // log G_n(u) = B_n(t) - B_n(u); then suffix accumulators downward.
    std::vector<double> cur(m_t + 1);
    const auto& bn = env.paths[n];
    for (std::int64_t u = 0; u <= m_t; ++u) cur[u] = bn[m_t] - bn[u];
    if (keep_backward) profile.backward[n - 1] = cur;

    std::vector<double> next(m_t + 1);
    for (int j = n - 1; j >= 1; --j) {
        const auto& b = env.paths[j];
        double acc = kNegInf;
        for (std::int64_t u = m_t; u >= 0; --u) {
            acc = log_add_exp(acc, b[u] + cur[u]);
            next[u] = -b[u] + acc + log_dt;
        }
        cur.swap(next);
        if (keep_backward) profile.backward[j - 1] = cur;
    }

    profile.log_marginal.resize(m_t + 1);
    for (std::int64_t s = 0; s <= m_t; ++s)
        profile.log_marginal[s] = theta * grid.node(s) - env.at(0, s) + cur[s];
    profile.log_z = log_sum_exp(profile.log_marginal) + log_dt;
    return profile;
}

double quenched_moment(const GibbsProfile& profile, Transform transform, int power,
                       double param) {
    if (power < 0) throw std::invalid_argument("moment power must be >= 0");
    if (transform == Transform::plus_min_tau || transform == Transform::tail_indicator) {
        if (!(param > 0.0) || param > profile.t + 0.5 * profile.grid.step())
            throw std::invalid_argument("transform parameter must be in (0, t]");
    }
    if (power == 0) return 1.0;

    const auto p = profile.probabilities();
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double s = profile.grid.node(static_cast<std::int64_t>(i));
        double f;
        switch (transform) {
            case Transform::identity: f = s; break;
            case Transform::plus: f = s > 0.0 ? s : 0.0; break;
            case Transform::minus: f = s < 0.0 ? -s : 0.0; break;
            case Transform::plus_min_tau: f = std::fmin(s > 0.0 ? s : 0.0, param); break;
            case Transform::tail_indicator: f = s > param ? 1.0 : 0.0; break;
            default: throw std::invalid_argument("unknown transform");
        }
        double term = p[i];
        for (int k = 0; k < power; ++k) term *= f;
        acc += term;
    }
    return acc;
}

std::vector<double> moments_to_cumulants(std::span<const double> moments) {
    const std::size_t k_max = moments.size();
    std::vector<double> kappa(k_max);
    // Binomial coefficients C(k-1, j-1) built on the fly (k_max is small).
    for (std::size_t k = 1; k <= k_max; ++k) {
        double sum = 0.0;
        double binom = 1.0;  // C(k-1, 0)
        for (std::size_t j = 1; j < k; ++j) {
            sum += binom * kappa[j - 1] * moments[k - j - 1];
            binom = binom * static_cast<double>(k - 1 - j + 1) / static_cast<double>(j);
        }
        kappa[k - 1] = moments[k - 1] - sum;
    }
    return kappa;
}

std::vector<double> quenched_cumulants(const GibbsProfile& profile, Transform variant,
                                       int k_max, double tau) {
    if (variant != Transform::plus && variant != Transform::plus_min_tau &&
        variant != Transform::identity && variant != Transform::minus)
        throw std::invalid_argument("unsupported cumulant variant");
    std::vector<double> m(k_max);
    for (int k = 1; k <= k_max; ++k) m[k - 1] = quenched_moment(profile, variant, k, tau);
    return moments_to_cumulants(m);
}

ThetaDerivativeCheck theta_derivative_check(const Environment& env, double theta, int n,
                                            double t, double h) {
    if (n < 1) throw std::invalid_argument("theta_derivative_check requires n >= 1");
    if (!(h > 0.0) || !(h < theta / 4.0))
        throw std::invalid_argument("theta_derivative_check requires 0 < h < theta/4");

    const double lz_p = log_stationary(env, theta + h, n, t).log_z;
    const double lz_m = log_stationary(env, theta - h, n, t).log_z;
    const double lz_0 = log_stationary(env, theta, n, t).log_z;
    const auto profile = backward_profiles(env, theta, n, t, /*keep_backward=*/false);
    const double e_s0 = quenched_moment(profile, Transform::identity, 1);

    ThetaDerivativeCheck out;
    out.residual = std::fabs((lz_p - lz_m) / (2.0 * h) - e_s0);
    out.second_difference = lz_p - 2.0 * lz_0 + lz_m;
    return out;
}

}  // namespace oy
