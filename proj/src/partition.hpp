#pragma once

// Log-space partition functions of the semi-discrete polymer on a discretized
// environment.
//
// The stationary recursion seeds level 0 with log Z_0(s) = theta*s - B_0(s)
// and applies, for j = 1..n,
//
//   log Z_j(u) = log sum_{v <= u} exp(log Z_{j-1}(v) + B_j(u) - B_j(v)) * dt,
//
// i.e. a rectangle rule with non-strict index ordering and weight dt per
// integration variable. The point-to-point version starts at s_0 = 0 on level
// 1 instead. Both run in O(n*m) using prefix log-sum-exp accumulators.

#include <optional>
#include <vector>

#include "environment.hpp"

namespace oy {

struct PartitionResult {
    double log_z = 0.0;
    std::vector<double> per_level;  // log Z_{j,t}, j = 0..n
    std::optional<double> theta;    // set for the stationary polymer
    int n = 0;
    double t = 0.0;
    std::int64_t t_index = 0;
    bool truncation_ok = true;  // grid t_left satisfies the recommended policy
};

/// Default left horizon realizing the -inf limit by truncation:
/// -max(10, 8 n^(2/3)) / min(theta, 1).
double recommended_t_left(double theta, int n);

PartitionResult log_stationary(const Environment& env, double theta, int n, double t);

PartitionResult log_point_to_point(const Environment& env, int n, double t);

/// Boundary-to-bulk increments r_j = log Z_j - log Z_{j-1}, j = 1..n.
/// Requires a stationary result with n >= 1.
std::vector<double> burke_increments(const PartitionResult& result);

}  // namespace oy
