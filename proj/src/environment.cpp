#include "environment.hpp"

#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace oy {

Environment sample_environment(const TimeGrid& grid, int levels, std::uint64_t seed,
                               std::uint64_t sample_index) {
    if (levels < 0) throw std::invalid_argument("environment needs levels >= 0");

    Environment env;
    env.grid = grid;
    env.levels = levels;
    env.seed = seed;
    env.sample_index = sample_index;

    const std::int64_t m = grid.size();
    const std::int64_t z = grid.index_of_zero();
    const double sqrt_dt = std::sqrt(grid.step());

    env.paths.assign(levels + 1, std::vector<double>(m, 0.0));
    env.increments.assign(levels + 1, std::vector<double>(m > 1 ? m - 1 : 0, 0.0));

    for (int j = 0; j <= levels; ++j) {
        auto& inc = env.increments[j];
        auto& path = env.paths[j];

        RngStream fwd(seed, sample_index, static_cast<std::uint32_t>(j), 0);
        for (std::int64_t i = z; i < m - 1; ++i) inc[i] = sqrt_dt * fwd.next_gaussian();

        RngStream bwd(seed, sample_index, static_cast<std::uint32_t>(j), 1);
        for (std::int64_t i = z - 1; i >= 0; --i) inc[i] = sqrt_dt * bwd.next_gaussian();

        // Prefix sums in fixed index order; B_j(0) stays exactly 0.
        path[z] = 0.0;
        for (std::int64_t i = z + 1; i < m; ++i) path[i] = path[i - 1] + inc[i - 1];
        for (std::int64_t i = z - 1; i >= 0; --i) path[i] = path[i + 1] - inc[i];
    }
    return env;
}

Environment zero_environment(const TimeGrid& grid, int levels) {
    if (levels < 0) throw std::invalid_argument("environment needs levels >= 0");
    Environment env;
    env.grid = grid;
    env.levels = levels;
    const std::int64_t m = grid.size();
    env.paths.assign(levels + 1, std::vector<double>(m, 0.0));
    env.increments.assign(levels + 1, std::vector<double>(m > 1 ? m - 1 : 0, 0.0));
    return env;
}

}  // namespace oy
