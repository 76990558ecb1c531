#include "rsqueue/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsqueue/errors.hpp"

namespace rsq {

// --------------------------------------------------------------- ServiceModel

ServiceModel::ServiceModel(ServiceKind k, double p0, double p1)
    : kind_(k), p0_(p0), p1_(p1) {
    switch (kind_) {
        case ServiceKind::Deterministic:
            mean_ = p0_;
            var_ = 0.0;
            break;
        case ServiceKind::Exponential:
            mean_ = p0_;
            var_ = p0_ * p0_;
            theta_max_ = 1.0 / p0_;
            break;
        case ServiceKind::BoundedUniform:
            mean_ = 0.5 * (p0_ + p1_);
            var_ = (p1_ - p0_) * (p1_ - p0_) / 12.0;
            break;
        case ServiceKind::Gamma:
            mean_ = p0_ * p1_;
            var_ = p0_ * p1_ * p1_;
            theta_max_ = 1.0 / p1_;
            break;
    }
}

ServiceModel ServiceModel::deterministic(double value) {
    if (value < 0.0) throw PreconditionError("deterministic service: value must be >= 0");
    return {ServiceKind::Deterministic, value, 0.0};
}

ServiceModel ServiceModel::exponential(double mean) {
    if (mean <= 0.0) throw PreconditionError("exponential service: mean must be > 0");
    return {ServiceKind::Exponential, mean, 0.0};
}

ServiceModel ServiceModel::bounded_uniform(double lo, double hi) {
    if (lo < 0.0 || hi <= lo) throw PreconditionError("bounded-uniform service: need 0 <= lo < hi");
    return {ServiceKind::BoundedUniform, lo, hi};
}

ServiceModel ServiceModel::gamma(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) throw PreconditionError("gamma service: shape, scale must be > 0");
    return {ServiceKind::Gamma, shape, scale};
}

double ServiceModel::mgf(double theta) const {
    if (theta >= theta_max_)
        throw DomainError("service mgf: theta >= theta_max = " + std::to_string(theta_max_));
    switch (kind_) {
        case ServiceKind::Deterministic:
            return std::exp(theta * p0_);
        case ServiceKind::Exponential:
            return 1.0 / (1.0 - theta * p0_);
        case ServiceKind::BoundedUniform: {
            const double w = theta * (p1_ - p0_);
            if (std::abs(w) < 1e-8) {
                // series around theta = 0
                return std::exp(theta * p0_) * (1.0 + 0.5 * w + w * w / 6.0);
            }
            return (std::exp(theta * p1_) - std::exp(theta * p0_)) / (theta * (p1_ - p0_));
        }
        case ServiceKind::Gamma:
            return std::pow(1.0 - p1_ * theta, -p0_);
    }
    return 1.0;
}

double ServiceModel::mgf_prime(double theta) const {
    if (theta >= theta_max_)
        throw DomainError("service mgf': theta >= theta_max = " + std::to_string(theta_max_));
    switch (kind_) {
        case ServiceKind::Deterministic:
            return p0_ * std::exp(theta * p0_);
        case ServiceKind::Exponential: {
            const double d = 1.0 - theta * p0_;
            return p0_ / (d * d);
        }
        case ServiceKind::BoundedUniform: {
            const double w = theta * (p1_ - p0_);
            if (std::abs(w) < 1e-8) {
                const double m2 = second_moment();
                const double m3 = (std::pow(p1_, 4) - std::pow(p0_, 4)) / (4.0 * (p1_ - p0_));
                return mean_ + theta * m2 + 0.5 * theta * theta * m3;
            }
            const double span = p1_ - p0_;
            return (p1_ * std::exp(theta * p1_) - p0_ * std::exp(theta * p0_)) / (theta * span) -
                   (std::exp(theta * p1_) - std::exp(theta * p0_)) / (theta * theta * span);
        }
        case ServiceKind::Gamma:
            return p0_ * p1_ * std::pow(1.0 - p1_ * theta, -p0_ - 1.0);
    }
    return mean_;
}

double ServiceModel::tilt_slope_limit() const {
    switch (kind_) {
        case ServiceKind::Deterministic: return p0_;
        case ServiceKind::BoundedUniform: return p1_;
        default: return std::numeric_limits<double>::infinity();
    }
}

double ServiceModel::sample(RandomStream& rng) const {
    switch (kind_) {
        case ServiceKind::Deterministic: return p0_;
        case ServiceKind::Exponential: return rng.exponential(p0_);
        case ServiceKind::BoundedUniform: return p0_ + (p1_ - p0_) * rng.uniform();
        case ServiceKind::Gamma: return rng.gamma(p0_, p1_);
    }
    return 0.0;
}

double ServiceModel::sample_tilted(double theta, RandomStream& rng) const {
    if (theta == 0.0) return sample(rng);
    if (theta >= theta_max_)
        throw DomainError("sample_tilted: theta >= theta_max");
    switch (kind_) {
        case ServiceKind::Deterministic:
            return p0_;
        case ServiceKind::Exponential:
            // tilt of exponential(mean m) at theta is exponential(mean m/(1-theta m))
            return rng.exponential(p0_ / (1.0 - theta * p0_));
        case ServiceKind::BoundedUniform: {
            // inverse CDF of density prop. to e^{theta v} on [lo, hi]
            const double u = rng.uniform();
            const double w = theta * (p1_ - p0_);
            return p0_ + std::log1p(u * std::expm1(w)) / theta;
        }
        case ServiceKind::Gamma:
            return rng.gamma(p0_, p1_ / (1.0 - p1_ * theta));
    }
    return 0.0;
}

// --------------------------------------------------------------------- QSpec

double QSpec::operator()(double t) const {
    switch (kind) {
        case QKind::Zero: return 0.0;
        case QKind::Linear: return param * t;
        case QKind::ExpSat: return -std::expm1(-param * t);
    }
    return 0.0;
}

double QSpec::derivative(double t) const {
    switch (kind) {
        case QKind::Zero: return 0.0;
        case QKind::Linear: return param;
        case QKind::ExpSat: return param * std::exp(-param * t);
    }
    return 0.0;
}

double QSpec::slope0() const { return kind == QKind::Zero ? 0.0 : param; }

// -------------------------------------------------------------- ScatterModel

ScatterModel ScatterModel::uniform01() {
    ScatterModel m;
    m.kind_ = ScatterKind::Uniform01;
    return m;
}

ScatterModel ScatterModel::exponential(double rate) {
    if (rate <= 0.0) throw PreconditionError("exponential scattering: rate must be > 0");
    ScatterModel m;
    m.kind_ = ScatterKind::Exponential;
    m.rate_ = rate;
    return m;
}

ScatterModel ScatterModel::sub_probability(const ScatterModel& base, double b) {
    if (b <= 0.0 || b > 1.0) throw PreconditionError("sub-probability scattering: need b in (0,1]");
    if (base.kind_ == ScatterKind::SubProbability)
        throw PreconditionError("sub-probability scattering: base must be a proper law");
    ScatterModel m;
    m.kind_ = ScatterKind::SubProbability;
    m.deficit_ = b;
    m.base_ = std::make_shared<ScatterModel>(base);
    return m;
}

ScatterModel ScatterModel::perturbed_uniform(QSpec q, double a, double n) {
    if (n <= 0.0) throw PreconditionError("perturbed-uniform scattering: population n must be > 0");
    ScatterModel m;
    m.kind_ = ScatterKind::PerturbedUniform;
    m.q_ = q;
    m.drift_a_ = a;
    m.pop_n_ = n;
    return m;
}

double ScatterModel::cdf(double t) const {
    switch (kind_) {
        case ScatterKind::Uniform01:
            return std::clamp(t, 0.0, 1.0);
        case ScatterKind::Exponential:
            return t <= 0.0 ? 0.0 : -std::expm1(-rate_ * t);
        case ScatterKind::SubProbability:
            return (1.0 - deficit_) * base_->cdf(t);
        case ScatterKind::PerturbedUniform: {
            if (t <= 0.0) return 0.0;
            if (t >= 1.0) return 1.0;
            return std::clamp(t + q_(t) / std::sqrt(pop_n_), 0.0, 1.0);
        }
    }
    return 0.0;
}

double ScatterModel::density(double t) const {
    switch (kind_) {
        case ScatterKind::Uniform01:
            return (t >= 0.0 && t <= 1.0) ? 1.0 : 0.0;
        case ScatterKind::Exponential:
            return t < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * t);
        case ScatterKind::SubProbability:
            return (1.0 - deficit_) * base_->density(t);
        case ScatterKind::PerturbedUniform:
            if (t < 0.0 || t > 1.0) return 0.0;
            return 1.0 + q_.derivative(t) / std::sqrt(pop_n_);
    }
    return 0.0;
}

double ScatterModel::quantile(double u) const {
    if (u < 0.0 || u > 1.0) throw DomainError("quantile: u outside [0,1]");
    switch (kind_) {
        case ScatterKind::Uniform01:
            return u;
        case ScatterKind::Exponential:
            return u >= 1.0 ? std::numeric_limits<double>::infinity()
                            : -std::log1p(-u) / rate_;
        case ScatterKind::SubProbability: {
            const double finite = 1.0 - deficit_;
            if (u >= finite) return std::numeric_limits<double>::infinity();
            return base_->quantile(u / finite);
        }
        case ScatterKind::PerturbedUniform: {
            // F is strictly increasing on [0,1] for admissible (q, n); bisect.
            double lo = 0.0, hi = 1.0;
            for (int i = 0; i < 80; ++i) {
                const double mid = 0.5 * (lo + hi);
                (cdf(mid) < u ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    return 0.0;
}

double ScatterModel::support_end() const {
    switch (kind_) {
        case ScatterKind::Uniform01:
        case ScatterKind::PerturbedUniform:
            return 1.0;
        case ScatterKind::Exponential:
            return std::numeric_limits<double>::infinity();
        case ScatterKind::SubProbability:
            return base_->support_end();
    }
    return 1.0;
}

double ScatterModel::sample(RandomStream& rng) const {
    return quantile(rng.uniform());
}

ScatterModel::ArrivalSample ScatterModel::sample_arrivals(std::size_t n,
                                                          RandomStream& rng) const {
    ArrivalSample out;
    out.total_drawn = n;
    out.times.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = sample(rng);
        if (std::isfinite(t)) out.times.push_back(t);
    }
    std::sort(out.times.begin(), out.times.end());
    return out;
}

} // namespace rsq
