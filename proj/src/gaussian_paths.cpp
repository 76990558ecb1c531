#include "rsqueue/gaussian_paths.hpp"

#include <cmath>

#include "rsqueue/errors.hpp"

namespace rsq {

GridPath brownian_bridge_path(const GridSpec& grid, RandomStream& rng) {
    if (grid.t0 != 0.0 || grid.t1 != 1.0)
        throw PreconditionError("brownian_bridge_path: grid must span [0,1]");
    GridPath path(grid);
    const double sdt = std::sqrt(grid.dt());
    double b = 0.0;
    for (std::size_t i = 1; i <= grid.m; ++i) {
        b += sdt * rng.normal();
        path[i] = b;
    }
    const double b1 = b;
    for (std::size_t i = 0; i <= grid.m; ++i)
        path[i] -= grid.time(i) * b1;
    return path;
}

GridPath z_process_path(const ServiceModel& service, const ScatterModel& scatter,
                        const GridSpec& grid, RandomStream& rng) {
    return z_process_path(std::sqrt(service.variance()), service.mean(), scatter, grid, rng);
}

GridPath z_process_path(double sig_v, double ev1, const ScatterModel& scatter,
                        const GridSpec& grid, RandomStream& rng) {
    GridPath path(grid);
    const std::size_t m = grid.m;

    // Sample both Gaussian sources in F-time on the grid image.
    std::vector<double> u(m + 1);
    for (std::size_t i = 0; i <= m; ++i) u[i] = scatter.cdf(grid.time(i));

    std::vector<double> b2(m + 1, 0.0); // bridge source BM
    double acc = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        const double du = u[i] - u[i - 1];
        acc += (du > 0.0 ? std::sqrt(du) * rng.normal() : 0.0);
        b2[i] = acc;
    }
    // Complete the bridge pin at F-time 1.
    const double tail = 1.0 - u[m];
    const double b2_at_1 = acc + (tail > 0.0 ? std::sqrt(tail) * rng.normal() : 0.0);
    for (std::size_t i = 0; i <= m; ++i)
        path[i] = ev1 * (b2[i] - u[i] * b2_at_1);

    if (sig_v > 0.0) {
        double b1 = 0.0;
        for (std::size_t i = 1; i <= m; ++i) {
            const double du = u[i] - u[i - 1];
            b1 += (du > 0.0 ? std::sqrt(du) * rng.normal() : 0.0);
            path[i] += sig_v * b1;
        }
    }
    return path;
}

} // namespace rsq
