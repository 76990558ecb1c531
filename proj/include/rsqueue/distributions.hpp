#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "rsqueue/rng.hpp"

namespace rsq {

// ---------------------------------------------------------------------------
// Service-time law
// ---------------------------------------------------------------------------

enum class ServiceKind { Deterministic, Exponential, BoundedUniform, Gamma };

/// Service-time distribution with closed-form moments, MGF phi(theta) on
/// [0, theta_max), tilted moments and exponentially tilted sampling.
class ServiceModel {
public:
    static ServiceModel deterministic(double value);
    static ServiceModel exponential(double mean);
    static ServiceModel bounded_uniform(double lo, double hi);
    static ServiceModel gamma(double shape, double scale);

    ServiceKind kind() const { return kind_; }
    double param(int i) const { return i == 0 ? p0_ : p1_; }

    double mean() const { return mean_; }
    double variance() const { return var_; }
    double second_moment() const { return mean_ * mean_ + var_; }
    double scv() const { return var_ / (mean_ * mean_); }

    /// Upper end of the MGF domain (+inf when the MGF is entire).
    double theta_max() const { return theta_max_; }

    /// phi(theta) = E e^{theta V}. Throws DomainError for theta >= theta_max.
    double mgf(double theta) const;

    /// phi'(theta) = E[V e^{theta V}].
    double mgf_prime(double theta) const;

    /// sup_theta phi'/((phi-1)dF+1)-type slope reachable by tilting; +inf when
    /// the tilted mean is unbounded (exponential, gamma), the essential sup of
    /// V for bounded kinds.
    double tilt_slope_limit() const;

    double sample(RandomStream& rng) const;

    /// Draw from e^{theta v} P(V in dv) / phi(theta).
    double sample_tilted(double theta, RandomStream& rng) const;

private:
    ServiceModel(ServiceKind k, double p0, double p1);

    ServiceKind kind_;
    double p0_ = 0.0, p1_ = 0.0;
    double mean_ = 0.0, var_ = 0.0;
    double theta_max_ = std::numeric_limits<double>::infinity();
};

// ---------------------------------------------------------------------------
// Arrival-scattering law
// ---------------------------------------------------------------------------

enum class QKind { Zero, Linear, ExpSat };

/// Residue function q of the near-balanced scattering condition.
/// Zero: q = 0; Linear: q(t) = k t; ExpSat: q(t) = 1 - e^{-g t}.
struct QSpec {
    QKind kind = QKind::Zero;
    double param = 0.0;

    double operator()(double t) const;
    double derivative(double t) const;
    /// Slope q0 of the slowly-varying linearization q(eps t)/eps -> q0 t.
    double slope0() const;
};

enum class ScatterKind { Uniform01, Exponential, SubProbability, PerturbedUniform };

/// Arrival-scattering distribution: CDF F, density, quantile, sampler, and the
/// sub-probability deficit b = 1 - F(inf) (mass at infinity).
class ScatterModel {
public:
    static ScatterModel uniform01();
    static ScatterModel exponential(double rate);
    /// Two-point mixture: the base law with weight 1-b, an atom at +inf with weight b.
    static ScatterModel sub_probability(const ScatterModel& base, double b);
    /// F(t) = t + q(t)/sqrt(n) on [0,1]; a is the service-rate drift coefficient.
    static ScatterModel perturbed_uniform(QSpec q, double a, double n);

    ScatterKind kind() const { return kind_; }
    double deficit() const { return deficit_; }
    double drift_coefficient() const { return drift_a_; }
    const QSpec& perturbation() const { return q_; }
    double population() const { return pop_n_; }

    double cdf(double t) const;
    double density(double t) const;
    /// Generalized inverse; returns +inf for u beyond the finite mass.
    double quantile(double u) const;
    /// A time T with F(T) = F(inf) (support end for grid purposes); +inf for exponential.
    double support_end() const;

    double sample(RandomStream& rng) const;

    /// n i.i.d. draws sorted ascending; draws landing in the infinity atom are
    /// dropped from the list, total_drawn records n.
    struct ArrivalSample {
        std::vector<double> times;
        std::size_t total_drawn = 0;
    };
    ArrivalSample sample_arrivals(std::size_t n, RandomStream& rng) const;

private:
    ScatterModel() = default;

    ScatterKind kind_ = ScatterKind::Uniform01;
    double rate_ = 1.0;           // exponential
    double deficit_ = 0.0;        // sub-probability mass at infinity
    std::shared_ptr<ScatterModel> base_; // sub-probability base law
    QSpec q_;                     // perturbed-uniform
    double drift_a_ = 0.0;
    double pop_n_ = 0.0;
};

} // namespace rsq
