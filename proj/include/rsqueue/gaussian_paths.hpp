#pragma once

#include <cmath>

#include "rsqueue/distributions.hpp"
#include "rsqueue/grid_path.hpp"
#include "rsqueue/rng.hpp"

namespace rsq {

/// Brownian bridge on a grid over [0,1], built as B(t) - t B(1) from exact
/// Gaussian increments (no discretization bias at grid nodes).
GridPath brownian_bridge_path(const GridSpec& grid, RandomStream& rng);

/// Z = sigma_V B1(F(t)) + EV1 B2^0(F(t)) on the grid, B1 independent of the
/// bridge B2^0. With sigma_V = 0 only the bridge's Gaussian source is consumed.
GridPath z_process_path(const ServiceModel& service, const ScatterModel& scatter,
                        const GridSpec& grid, RandomStream& rng);

/// Moment-parameterized variant (same construction).
GridPath z_process_path(double sigma_v, double ev1, const ScatterModel& scatter,
                        const GridSpec& grid, RandomStream& rng);

/// Exact minimum of a Brownian bridge over one grid cell, conditional on the
/// endpoint values a (left) and b (right); sig2 is the diffusion coefficient,
/// dt the cell width. Drift does not alter the conditional law.
inline double cell_minimum(double a, double b, double sig2, double dt,
                           RandomStream& rng) {
    const double d = b - a;
    const double u = rng.uniform_pos();
    return 0.5 * (a + b - std::sqrt(d * d - 2.0 * sig2 * dt * std::log(u)));
}

/// Exact cell maximum, same conditioning.
inline double cell_maximum(double a, double b, double sig2, double dt,
                           RandomStream& rng) {
    const double d = b - a;
    const double u = rng.uniform_pos();
    return 0.5 * (a + b + std::sqrt(d * d - 2.0 * sig2 * dt * std::log(u)));
}

} // namespace rsq
