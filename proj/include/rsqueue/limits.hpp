#pragma once

#include <cstdint>

#include "rsqueue/distributions.hpp"
#include "rsqueue/grid_path.hpp"
#include "rsqueue/rng.hpp"

namespace rsq {

/// Skorokhod reflection Psi(x)(t) = x(t) - inf_{s<=t} x(s), single pass.
GridPath reflection_map(const GridPath& x);

/// Second-order regime of the near-balanced queue: c = n EV1 b + a sqrt(n),
/// F(t) = b t + q(t)/sqrt(n).
struct Regime {
    double a = 0.0;
    QSpec q;
    double b = 1.0; // scattering mass deficit complement: b = 1 - F(inf)... kept as the paper's b
    double ev1 = 1.0;
    double sigma_v = 0.0;
    double ev1_sq = 1.0;
};

/// Fluid workload sup_{0<=s<=t} (EV1 (F(t)-F(s)) - rho (t-s)); grid search plus
/// golden-section refinement (tolerance 1e-8 in s).
double fluid_workload(double t, const ServiceModel& service,
                      const ScatterModel& scatter, double rho);

/// One sample path of Psi(Z + EV1 (q - a e)) on the grid; Z uses F = b * id
/// under the sub-probability extension.
GridPath diffusion_workload_path(const Regime& regime, const GridSpec& grid,
                                 RandomStream& rng);

/// KS distance between the empirical law of W_n(t)/sqrt(n) (exact simulation,
/// c = n EV1 b + a sqrt(n)) and the transient-law quadrature CDF at t.
double fclt_gap(std::size_t n, const ServiceModel& service,
                const ScatterModel& scatter, const Regime& regime,
                std::size_t reps, double t_query, std::uint64_t seed,
                std::uint64_t stream_base = 0, unsigned workers = 1);

} // namespace rsq
