#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oy {

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b, double alpha) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample needs data");
    std::vector<double> xs(a.begin(), a.end());
    std::vector<double> ys(b.begin(), b.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());

    const double na = static_cast<double>(xs.size());
    const double nb = static_cast<double>(ys.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        const double x = std::min(xs[i], ys[j]);
        while (i < xs.size() && xs[i] <= x) ++i;
        while (j < ys.size() && ys[j] <= x) ++j;
        d = std::fmax(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }

    KsResult res;
    res.distance = d;
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    res.critical = c * std::sqrt((na + nb) / (na * nb));
    res.pass = d < res.critical;
    return res;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> sigma) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("fit_line needs >= 2 points");

    std::vector<double> w(n, 1.0);
    bool weighted = sigma.size() == n;
    if (weighted)
        for (std::size_t i = 0; i < n; ++i) {
            if (!(sigma[i] > 0.0)) {
                weighted = false;
                break;
            }
            w[i] = 1.0 / (sigma[i] * sigma[i]);
        }
    if (!weighted) std::fill(w.begin(), w.end(), 1.0);

    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
        sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;
    fit.slope_se = std::sqrt(1.0 / sxx);

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = fit.intercept + fit.slope * x[i];
        ss_res += w[i] * (y[i] - pred) * (y[i] - pred);
        ss_tot += w[i] * (y[i] - ybar) * (y[i] - ybar);
    }
    fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance_of(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean_of(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double correlation_of(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("correlation_of needs paired samples");
    const double mx = mean_of(xs);
    const double my = mean_of(ys);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace oy
