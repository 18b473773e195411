#pragma once

// Numerically stable log-space accumulation helpers.

#include <cmath>
#include <limits>
#include <span>

namespace oy {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = a > b ? a : b;
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// Log-sum-exp over a span with a running maximum; fixed left-to-right order.
inline double log_sum_exp(std::span<const double> xs) {
    double max = kNegInf;
    for (double x : xs)
        if (x > max) max = x;
    if (max == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - max);
    return max + std::log(acc);
}

}  // namespace oy
