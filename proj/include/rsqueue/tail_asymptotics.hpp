#pragma once

#include <cstdint>

namespace rsq {

/// Extreme-value problem for the standardized Gaussian workload approximation:
/// P(sup_{s<=t}(Z~(s) - c s) > x) with Z~ = Z/EV1, Cov Z~(s)Z~(t) = s(scv+1-t).
/// By time reversal this is the tail of the reflected workload at the horizon.
struct TailProblem {
    double c = 1.0;   // drift (service-rate excess, standardized units)
    double x = 1.0;   // exceedance level (raw scale)
    double scv = 1.0; // squared coefficient of variation of service times

    /// t* formula before clipping to [0,1].
    double t_star_unclipped() const;
    /// Boundary regime iff the unclipped minimizer falls at or beyond 1.
    bool boundary() const { return t_star_unclipped() >= 1.0; }
};

/// sigma(t) = sqrt(t (scv + 1 - t)), the variance-time curve of Z~.
double variance_time_curve(double t, double scv);

/// m_x(t) = (c t + x)/sigma(t); +inf sentinel at t = 0.
double m_curve(double t, const TailProblem& p);

/// Unique minimizer of m_x over [0,1]: x(scv+1)/(c(scv+1)+2x), clipped to 1 in
/// the boundary regime.
double t_star(const TailProblem& p);

/// Curvature constant of the standardized variance-time curve at t*:
/// A = -sigma~''(t*)/2 with sigma~ = m_x(t*)/m_x, in closed form
/// A = (scv+1)^2 / (8 sigma(t*)^4). Interior regime only.
double curvature_A(const TailProblem& p);

/// The section's printed curvature display (reference value only; it does not
/// equal the finite-difference curvature of sigma~).
double curvature_A_printed(const TailProblem& p);

/// Local-correlation constant of the standardized field: D = (scv+1)/(2 sigma(t*)^2).
double corr_D(const TailProblem& p);

/// The printed D = (scv+1)/2 (reference value only).
double corr_D_printed(const TailProblem& p);

/// Pickands constant H_alpha for alpha in {1, 2}: H_1 = 1, H_2 = 1/sqrt(pi).
double pickands_H(int alpha);

/// H(alpha,beta) = Gamma(1/beta) D^{1/alpha} sigma^{1/beta} H_alpha
///              / (sqrt(2 pi) beta A^{1/beta}); requires beta > alpha > 0.
double piterbarg_prefactor(double alpha, double beta, double D, double sigma, double A);

/// Exact asymptotic of the standardized exceedance P(max field > m) with
/// alpha=1, beta=2 and the re-derived (D, A): interior 2 H e^{-m^2/2},
/// boundary without the factor 2 (the polynomial exponent vanishes).
double tail_prob_asymptotic(double m_level, const TailProblem& p);

/// Convenience wrapper: maps the raw exceedance level x through m_x(t*).
double tail_prob_raw_level(const TailProblem& p);

/// Monte Carlo of P(sup_{[0,1]}(Z~ - c e) > x_raw) with exact cell maxima.
struct TailMcResult {
    double p_hat = 0.0;
    double std_err = 0.0;
};
TailMcResult tail_prob_mc(const TailProblem& p, std::size_t paths, std::size_t grid_m,
                          std::uint64_t seed, std::uint64_t stream_base = 0,
                          unsigned workers = 1);

} // namespace rsq
