#pragma once

// Discretized two-sided Brownian environments.
//
// An environment holds n+1 independent paths B_0..B_n sampled on a TimeGrid,
// pinned to B_j(0) = 0. Increments are drawn per (seed, sample_index, level,
// direction) from counter-based streams, forward from 0 to t_right and
// independently backward from 0 to t_left, so extending the grid to the left
// keeps the already-sampled nodes bit-identical.

#include <cstdint>
#include <vector>

#include "grid.hpp"

namespace oy {

struct Environment {
    TimeGrid grid;
    int levels = 0;  // n: paths are B_0..B_levels
    std::vector<std::vector<double>> paths;       // [level][node]
    std::vector<std::vector<double>> increments;  // [level][node], B(node+1)-B(node)
    std::uint64_t seed = 0;
    std::uint64_t sample_index = 0;

    double at(int level, std::int64_t node_idx) const { return paths[level][node_idx]; }
};

Environment sample_environment(const TimeGrid& grid, int levels, std::uint64_t seed,
                               std::uint64_t sample_index);

/// All paths identically zero; used for closed-form checks.
Environment zero_environment(const TimeGrid& grid, int levels);

}  // namespace oy
