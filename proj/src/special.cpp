#include "special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oy {

namespace {

// B_2, B_4, ..., B_20.
constexpr double kBernoulli[10] = {
    1.0 / 6.0,        -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0,  7.0 / 6.0,       -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

// Asymptotic series for psi_0 at large x.
double digamma_asymptotic(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double sum = std::log(x) - 0.5 * inv;
    double pw = inv2;
    for (int i = 0; i < 8; ++i) {
        sum -= kBernoulli[i] / (2.0 * (i + 1)) * pw;
        pw *= inv2;
    }
    return sum;
}

// Asymptotic series for (-1)^(k-1) psi_k at large x, k >= 1:
//   (k-1)!/x^k + k!/(2 x^(k+1)) + sum_i B_{2i} (2i+k-1)!/(2i)! x^-(2i+k)
double polygamma_asymptotic_signless(int k, double x) {
    double fact_km1 = 1.0;
    for (int r = 2; r <= k - 1; ++r) fact_km1 *= r;
    const double inv = 1.0 / x;
    double inv_pk = std::pow(inv, k);
    double sum = fact_km1 * inv_pk + fact_km1 * k * 0.5 * inv_pk * inv;
    double pw = inv_pk * inv * inv;
    for (int i = 1; i <= 8; ++i) {
        // (2i+k-1)! / (2i)! = (2i+1)(2i+2)...(2i+k-1)
        double ratio = 1.0;
        for (int r = 2 * i + 1; r <= 2 * i + k - 1; ++r) ratio *= r;
        sum += kBernoulli[i - 1] * ratio * pw;
        pw *= inv * inv;
    }
    return sum;
}

}  // namespace

double polygamma(int k, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::domain_error("polygamma requires theta > 0");
    if (k < 0 || k > kPolygammaMaxOrder)
        throw std::invalid_argument("polygamma order must be in [0, " +
                                    std::to_string(kPolygammaMaxOrder) + "]");

    const double threshold = 10.0 + k;
    double x = theta;
    if (k == 0) {
        double shift = 0.0;
        while (x < threshold) {
            shift += 1.0 / x;
            x += 1.0;
        }
        return digamma_asymptotic(x) - shift;
    }

    // psi_k(x) = psi_k(x+N) - (-1)^k k! sum_j (x+j)^-(k+1); fold the sign in.
    double fact_k = 1.0;
    for (int r = 2; r <= k; ++r) fact_k *= r;
    double shift = 0.0;
    while (x < threshold) {
        shift += std::pow(x, -(k + 1));
        x += 1.0;
    }
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k-1)
    return sign * (polygamma_asymptotic_signless(k, x) + fact_k * shift);
}

PolygammaTable polygamma_table(double theta, int k_max) {
    PolygammaTable table;
    table.theta = theta;
    table.values.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k) table.values.push_back(polygamma(k, theta));
    return table;
}

double hermite(int k, double t, double x) {
    if (k < 0) throw std::invalid_argument("hermite order must be >= 0");
    if (!(t > 0.0)) throw std::domain_error("hermite variance must be > 0");
    if (k == 0) return 1.0;
    double prev = 1.0;  // H_0
    double cur = x;     // H_1
    for (int j = 1; j < k; ++j) {
        const double next = x * cur - static_cast<double>(j) * t * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double sample_log_inverse_gamma(double theta, RngStream& rng) {
    if (!(theta > 0.0)) throw std::domain_error("gamma shape must be > 0");

    // Marsaglia-Tsang; for theta < 1 sample Gamma(theta+1) and boost.
    const double shape = theta < 1.0 ? theta + 1.0 : theta;
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    double log_x;
    for (;;) {
        const double z = rng.next_gaussian();
        const double b = 1.0 + c * z;
        if (b <= 0.0) continue;
        const double v = b * b * b;
        const double u = rng.next_unit();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2 || std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
            log_x = std::log(d * v);
            break;
        }
    }
    if (theta < 1.0) log_x += std::log(rng.next_unit()) / theta;
    return -log_x;
}

}  // namespace oy
