#pragma once

#include <cstdint>
#include <vector>

namespace rsq {

/// Parameters of the reflected-Gaussian transient laws. d is the absolute
/// drain-rate excess (d = a EV1 for the near-balanced queue); scale
/// normalization by s* = sqrt(EV1^2) happens inside the evaluators, public
/// values are in natural units.
struct ReflectedLawParams {
    double t = 0.5;       // query time in (0,1)
    double lambda = 0.0;  // level >= 0
    double d = 0.0;       // drift rate
    double sigma_v = 0.0; // service std deviation
    double ev1_sq = 1.0;  // service second moment E V^2 (s*^2)
};

/// P(Psi(B0 - d e)(t) <= lambda) for a standard Brownian bridge B0.
/// Re-derived contract: Phi((l+dt)/s) - e^{-2l(l+d)} Phi((l(2t-1)+dt)/s),
/// s = sqrt(t(1-t)); t in (0,1], with the Doob limit 1-e^{-2l(l+d)} at t=1.
double reflected_bridge_cdf(double lambda, double t, double d);

/// The lemma exactly as printed (reference only; fails its own t->1 limit).
double reflected_bridge_cdf_printed(double lambda, double t, double d);

/// I(a,b,c) = int e^{-a xi^2} Phi(b xi + c) dxi
///          = sqrt(pi/a) Phi(c sqrt(2a/(2a+b^2))).  Requires a > 0.
double gauss_phi_integral(double a, double b, double c);

/// The printed constants sqrt(2pi/a), sqrt(a/(a+b^2)) (reference only; they
/// fail the b = 0 reduction).
double gauss_phi_integral_printed(double a, double b, double c);

/// Transient CDF of Psi(Z - d e)(t), closed form. Must agree with the
/// quadrature evaluator to 1e-8.
double reflected_diffusion_cdf_closed(const ReflectedLawParams& p);

/// Section-4 theorem with the printed constants (reference only).
double reflected_diffusion_cdf_printed(const ReflectedLawParams& p);

/// Authoritative evaluator: integrates the conditional reflected-bridge law
/// over the independent Gaussian drift mixture, adaptive Gauss-Kronrod on
/// (-10, 10), absolute tolerance 1e-9.
double reflected_diffusion_cdf_quadrature(const ReflectedLawParams& p);

/// Slowly-varying-residue limit: the closed form with effective drift
/// d_eff = EV1 (a - q0).
double slowly_varying_limit_cdf(double lambda, double t, double q0, double a,
                                double ev1, double sigma_v, double ev1_sq);

/// Monte Carlo CDF of Psi(Z - d e)(t) evaluated at the given levels.
/// Z is simulated as s* B0 + sigma_v e xi with exact per-cell minima of the
/// conditional bridge, so the running infimum carries no grid bias.
std::vector<double> reflected_diffusion_mc_cdf(const std::vector<double>& lambdas,
                                               double t, double d, double sigma_v,
                                               double ev1_sq, std::size_t paths,
                                               std::size_t grid_m, std::uint64_t seed,
                                               std::uint64_t stream_base = 0,
                                               unsigned workers = 1);

} // namespace rsq
