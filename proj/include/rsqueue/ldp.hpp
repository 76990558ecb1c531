#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsqueue/distributions.hpp"
#include "rsqueue/queue_sim.hpp"
#include "rsqueue/rng.hpp"

namespace rsq {

/// Large-deviations problem for the event {W_n(t) > n x} with c = n c'.
/// Construction checks the rare-event condition
/// x > sup_{0<=s<=t}(EV1 (F(t)-F(s)) - c'(t-s)) via the fluid machinery.
class LdpProblem {
public:
    LdpProblem(ServiceModel service, ScatterModel scatter, double t, double x,
               double c_prime);

    const ServiceModel& service() const { return service_; }
    const ScatterModel& scatter() const { return scatter_; }
    double horizon() const { return t_; }
    double x() const { return x_; }
    double c_prime() const { return c_prime_; }
    double fluid_threshold() const { return threshold_; }

private:
    ServiceModel service_;
    ScatterModel scatter_;
    double t_, x_, c_prime_;
    double threshold_;
};

/// v(s,theta) = log((phi(theta)-1)(F(t)-F(s)) + 1).
double log_mgf_v(double s, double theta, const LdpProblem& p);

/// dv/dtheta = phi'(theta)(F(t)-F(s)) / ((phi(theta)-1)(F(t)-F(s)) + 1).
double log_mgf_v_dtheta(double s, double theta, const LdpProblem& p);

/// Unique positive root of dv/dtheta - c'(t-s) = x; bracketed bisection with
/// residual <= 1e-9. Throws RootNotFoundError (naming the achievable
/// supremum) when the target slope is unreachable.
double theta_root(double s, const LdpProblem& p);

/// I'(s) = theta(s) x - v(s, theta(s)) + theta(s) c'(t-s).
double rate_value(double s, const LdpProblem& p);

/// Tabulated rate profile over [0, t) with the minimizer record.
struct RateProfile {
    std::vector<double> s;
    std::vector<double> theta;
    std::vector<double> rate;
    double t_star = 0.0;
    double rate_at_t_star = 0.0;
};

RateProfile rate_profile(const LdpProblem& p, std::size_t grid_points = 1000);

/// Grid scan on [0, t - 1e-6] plus golden-section refinement; the right
/// endpoint is excluded from the minimization.
std::pair<double, double> rate_minimize(const LdpProblem& p,
                                        std::size_t grid_points = 1000);

/// Tilted joint law of (T, V) determined by (t*, theta(t*)).
struct TwistedLaw {
    double t_star = 0.0;
    double theta_star = 0.0;
    double v_star = 0.0; // log-normalizer v(t*, theta*)
    double t = 0.0;      // horizon: tilt applies on (t*, t]
};

TwistedLaw make_twisted_law(const LdpProblem& p);

/// Expected cumulative work profile under the twisted measure (per customer):
/// s <= t*: EV1 F(s) e^{-v*};
/// s in (t*, t]: (EV1 F(t*) + E[V e^{theta* V}](F(s)-F(t*))) e^{-v*}.
double rare_event_path(double s, const TwistedLaw& tw, const LdpProblem& p);

/// One (T, V) draw from the tilted joint law.
std::pair<double, double> twisted_sample(const TwistedLaw& tw, const LdpProblem& p,
                                         RandomStream& rng);

/// Importance-sampling estimate of P(W_n(t) > n x): n twisted pairs per
/// replication, likelihood ratio exp(-theta* Gamma_n(t*, t] + n v*).
TailEstimate is_estimate(const LdpProblem& p, std::size_t n, std::size_t reps,
                         std::uint64_t seed, std::uint64_t stream_base = 0,
                         unsigned workers = 1);

/// Same estimator under an explicitly supplied tilt (theta* = 0 reduces to
/// crude Monte Carlo with unit weights).
TailEstimate is_estimate(const LdpProblem& p, const TwistedLaw& tw, std::size_t n,
                         std::size_t reps, std::uint64_t seed,
                         std::uint64_t stream_base = 0, unsigned workers = 1);

/// Mean and standard error of the bare likelihood ratio under the twisted
/// measure (normalization identity: the mean is 1).
TailEstimate is_weight_mean(const LdpProblem& p, std::size_t n, std::size_t reps,
                            std::uint64_t seed, std::uint64_t stream_base = 0,
                            unsigned workers = 1);

} // namespace rsq
