#pragma once

#include <cstdint>

#include "rsqueue/grid_path.hpp"
#include "rsqueue/rng.hpp"

namespace rsq {

/// Parameters of the periodic high-intensity Gaussian laws (period T = 1).
struct PeriodicGaussParams {
    double a = 0.0;      // service-rate drift coefficient
    double sigma_v2 = 0.0;
    double ev1_sq = 1.0; // second moment E V^2
    double t = 1.0;      // query time >= 1; slot index p_t = ceil(t)

    double ev1() const;  // sqrt(EV1^2 - sigma_V^2)
    int slot_index() const;
    bool steady_state_valid() const { return sigma_v2 < ev1_sq; }
};

/// Periodic fluid offered work between s and t:
/// (p_t - p_s) EV1 + EV1 (F_{p_t}(t) - F_{p_s}(s)), F_m(t) = F(t-(m-1)).
double periodic_fluid(double s, double t, double ev1,
                      const class ScatterModel& scatter);

/// Periodic Gaussian input process: fresh full-slot normals plus fresh
/// per-slot (B, B0) pairs, continuous across slot boundaries.
GridPath periodic_z_path(const PeriodicGaussParams& params, std::size_t cells_per_slot,
                         std::size_t num_slots, RandomStream& rng);

/// Single-period steady law phi(lambda, a) =
/// 1 - exp(-2 l(l+a)/EV1^2 + 2 l^2 sigma_V^2/(EV1^2)^2), clamped to [0,1];
/// lambda < 0 gives 0.
double phi_steady(double lambda, double a, double sigma_v2, double ev1_sq);

/// Deterministic-service steady law 1 - exp(-2x(1+x)) (phi at a=1, sigma_V=0).
double det_service_steady(double x);

/// Transient law at t >= 1:
/// phi(l,a) Phi(a) + (2pi)^{-1/2} int_a^inf phi(l - sigma_V (p_t-1) x, a) e^{-x^2/2} dx,
/// the integrand's phi clamped to [0,1]. steady_warn (optional) is set when
/// sigma_V^2 >= EV1^2, where the steady-state claim does not apply.
double periodic_transient_cdf(double lambda, const PeriodicGaussParams& params,
                              bool* steady_warn = nullptr);

/// Steady law 1 - Phi(a) exp(-2 l(l+a)/EV1^2 + 2 l^2 sigma_V^2/(EV1^2)^2);
/// requires sigma_V^2 < EV1^2.
double periodic_steady_cdf(double lambda, const PeriodicGaussParams& params);

/// Monte Carlo samples (sorted) of the reflected periodic Gaussian workload
/// sup_{0<=s<=t}(Z~(t) - Z~(s) - a(t-s)) at t = params.t, simulated from
/// periodic_z_path's construction with exact per-cell minima of the running
/// infimum.
std::vector<double> periodic_gauss_workload_mc(const PeriodicGaussParams& params,
                                               std::size_t paths,
                                               std::size_t cells_per_slot,
                                               std::uint64_t seed,
                                               std::uint64_t stream_base = 0,
                                               unsigned workers = 1);

} // namespace rsq
