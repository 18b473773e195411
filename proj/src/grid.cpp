#include "grid.hpp"

#include <cmath>
#include <string>

namespace oy {

TimeGrid::TimeGrid(std::int64_t i_left, std::int64_t i_right, double step)
    : i_left_(i_left), i_right_(i_right), step_(step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw GridError("grid step must be positive and finite");
    if (i_left > 0 || i_right < 1)
        throw GridError("grid must satisfy t_left <= 0 < t_right");
}

std::int64_t TimeGrid::index_of(double t) const {
    const std::int64_t idx = nearest_index(t);
    const double err = std::fabs(node(idx) - t);
    if (err > 1e-9 * std::fmax(1.0, std::fabs(t)))
        throw GridAlignmentError("time " + std::to_string(t) + " is not a grid node");
    return idx;
}

std::int64_t TimeGrid::nearest_index(double t) const {
    const auto k = static_cast<std::int64_t>(std::llround(t / step_));
    const std::int64_t idx = k - i_left_;
    if (idx < 0) return 0;
    if (idx >= size()) return size() - 1;
    return idx;
}

TimeGrid make_grid(double t_left, double t_right, double step, std::int64_t max_nodes) {
    if (!std::isfinite(t_left) || !std::isfinite(t_right) || !std::isfinite(step))
        throw GridError("grid endpoints and step must be finite");
    if (!(step > 0.0)) throw GridError("grid step must be positive");
    if (!(t_left <= 0.0) || !(t_right > 0.0))
        throw GridError("grid requires t_left <= 0 < t_right");

    // Snap outward; the small tolerance keeps exact multiples from drifting
    // one node out due to division rounding.
    const double lo = t_left / step;
    const double hi = t_right / step;
    if (std::fabs(lo) > 4.5e15 || std::fabs(hi) > 4.5e15)
        throw GridSizeError("grid node index overflows");
    const auto i_left = static_cast<std::int64_t>(std::floor(lo + 1e-9));
    const auto i_right = static_cast<std::int64_t>(std::ceil(hi - 1e-9));

    const std::int64_t count = i_right - i_left + 1;
    if (count > max_nodes)
        throw GridSizeError("grid would have " + std::to_string(count) +
                            " nodes, above the configured cap " + std::to_string(max_nodes));
    return TimeGrid(i_left, i_right < 1 ? 1 : i_right, step);
}

}  // namespace oy
