#pragma once

// Uniform time grids anchored at 0.
//
// Nodes are stored as integer multiples of the step: node k lives at k*step
// for k in [i_left, i_right], which makes 0 a grid node by construction and
// keeps spacing uniform to rounding.

#include <cstdint>
#include <stdexcept>

namespace oy {

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GridSizeError : GridError {
    using GridError::GridError;
};
struct GridAlignmentError : GridError {
    using GridError::GridError;
};

class TimeGrid {
public:
    TimeGrid() = default;
    TimeGrid(std::int64_t i_left, std::int64_t i_right, double step);

    double t_left() const { return node(0); }
    double t_right() const { return node(size() - 1); }
    double step() const { return step_; }
    std::int64_t size() const { return i_right_ - i_left_ + 1; }

    /// Value of the idx-th node, idx in [0, size()).
    double node(std::int64_t idx) const { return static_cast<double>(i_left_ + idx) * step_; }

    std::int64_t index_of_zero() const { return -i_left_; }

    /// Index of the node at time t; throws GridAlignmentError if t is not a node.
    std::int64_t index_of(double t) const;

    /// Nearest node to t (clamped to the grid).
    std::int64_t nearest_index(double t) const;

    bool operator==(const TimeGrid&) const = default;

private:
    std::int64_t i_left_ = 0;
    std::int64_t i_right_ = 0;
    double step_ = 1.0;
};

/// Builds a grid covering [t_left, t_right]; endpoints are snapped outward to
/// multiples of step so that 0 is always a node.
TimeGrid make_grid(double t_left, double t_right, double step,
                   std::int64_t max_nodes = 1 << 24);

}  // namespace oy
