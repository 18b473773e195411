#include "partition.hpp"

#include <cmath>
#include <stdexcept>

#include "logsum.hpp"

namespace oy {

double recommended_t_left(double theta, int n) {
    const double scale = std::fmax(10.0, 8.0 * std::pow(static_cast<double>(n), 2.0 / 3.0));
    return -scale / std::fmin(theta, 1.0);
}

PartitionResult log_stationary(const Environment& env, double theta, int n, double t) {
    if (!(theta > 0.0)) throw std::domain_error("log_stationary requires theta > 0");
    if (n < 0) throw std::invalid_argument("log_stationary requires n >= 0");
    if (env.levels < n) throw std::invalid_argument("environment has fewer than n+1 paths");
    if (!(t > 0.0)) throw std::invalid_argument("log_stationary requires t > 0");

    const TimeGrid& grid = env.grid;
    const std::int64_t m_t = grid.index_of(t);  // throws if t is off-grid
    const double dt = grid.step();
    const double log_dt = std::log(dt);

    PartitionResult res;
    res.theta = theta;
    res.n = n;
    res.t = grid.node(m_t);
    res.t_index = m_t;
    res.truncation_ok = grid.t_left() <= recommended_t_left(theta, n) + 0.5 * dt;
    res.per_level.resize(n + 1);

    // Level 0 seed over all nodes up to t.
    std::vector<double> cur(m_t + 1);
    for (std::int64_t v = 0; v <= m_t; ++v) cur[v] = theta * grid.node(v) - env.at(0, v);
    res.per_level[0] = cur[m_t];

    std::vector<double> next(m_t + 1);
    for (int j = 1; j <= n; ++j) {
        const auto& b = env.paths[j];
        double acc = kNegInf;
        for (std::int64_t v = 0; v <= m_t; ++v) {
            acc = log_add_exp(acc, cur[v] - b[v]);
            next[v] = b[v] + acc + log_dt;
        }
        res.per_level[j] = next[m_t];
        cur.swap(next);
    }
    res.log_z = res.per_level[n];
    return res;
}

PartitionResult log_point_to_point(const Environment& env, int n, double t) {
    if (n < 1) throw std::invalid_argument("log_point_to_point requires n >= 1");
    if (env.levels < n) throw std::invalid_argument("environment has fewer than n paths");
    if (!(t > 0.0)) throw std::invalid_argument("log_point_to_point requires t > 0");

    const TimeGrid& grid = env.grid;
    const std::int64_t m_t = grid.index_of(t);
    const std::int64_t z = grid.index_of_zero();
    const double log_dt = std::log(grid.step());

    PartitionResult res;
    res.n = n;
    res.t = grid.node(m_t);
    res.t_index = m_t;
    res.per_level.resize(n + 1);
    res.per_level[0] = 0.0;  // empty path from (0,0)

    const std::int64_t count = m_t - z + 1;
    std::vector<double> cur(count);
    for (std::int64_t v = 0; v < count; ++v) cur[v] = env.at(1, z + v);  // B_1(s) - B_1(0)
    res.per_level[1] = cur[count - 1];

    std::vector<double> next(count);
    for (int j = 2; j <= n; ++j) {
        const auto& b = env.paths[j];
        double acc = kNegInf;
        for (std::int64_t v = 0; v < count; ++v) {
            acc = log_add_exp(acc, cur[v] - b[z + v]);
            next[v] = b[z + v] + acc + log_dt;
        }
        res.per_level[j] = next[count - 1];
        cur.swap(next);
    }
    res.log_z = res.per_level[n];
    return res;
}

std::vector<double> burke_increments(const PartitionResult& result) {
    if (!result.theta.has_value())
        throw std::invalid_argument("burke_increments requires a stationary result");
    if (result.n < 1)
        throw std::invalid_argument("burke_increments requires n >= 1");
    std::vector<double> r(result.n);
    for (int j = 1; j <= result.n; ++j) r[j - 1] = result.per_level[j] - result.per_level[j - 1];
    return r;
}

}  // namespace oy
