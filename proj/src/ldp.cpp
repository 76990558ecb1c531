#include "rsqueue/ldp.hpp"

#include <algorithm>
#include <cmath>

#include "rsqueue/errors.hpp"
#include "rsqueue/limits.hpp"
#include "rsqueue/parallel.hpp"

namespace rsq {

LdpProblem::LdpProblem(ServiceModel service, ScatterModel scatter, double t, double x,
                       double c_prime)
    : service_(std::move(service)),
      scatter_(std::move(scatter)),
      t_(t),
      x_(x),
      c_prime_(c_prime) {
    if (!(t > 0.0)) throw PreconditionError("LdpProblem: horizon t must be > 0");
    threshold_ = fluid_workload(t, service_, scatter_, c_prime_);
    if (!(x > threshold_))
        throw PreconditionError("LdpProblem: x-condition violated, need x > " +
                                std::to_string(threshold_));
}

double log_mgf_v(double s, double theta, const LdpProblem& p) {
    if (s < 0.0 || s > p.horizon()) throw DomainError("log_mgf_v: s outside [0,t]");
    const double df = p.scatter().cdf(p.horizon()) - p.scatter().cdf(s);
    return std::log1p((p.service().mgf(theta) - 1.0) * df);
}

double log_mgf_v_dtheta(double s, double theta, const LdpProblem& p) {
    if (s < 0.0 || s > p.horizon()) throw DomainError("log_mgf_v_dtheta: s outside [0,t]");
    const double df = p.scatter().cdf(p.horizon()) - p.scatter().cdf(s);
    return p.service().mgf_prime(theta) * df /
           ((p.service().mgf(theta) - 1.0) * df + 1.0);
}

double theta_root(double s, const LdpProblem& p) {
    if (s < 0.0 || s >= p.horizon()) throw DomainError("theta_root: s outside [0,t)");
    const double df = p.scatter().cdf(p.horizon()) - p.scatter().cdf(s);
    const double target = p.x() + p.c_prime() * (p.horizon() - s);
    // The tilted window mean dv/dtheta increases to a (possibly infinite)
    // limit; bounded service kinds cap it at the essential supremum.
    const double slope_sup = p.service().tilt_slope_limit();
    if (df <= 0.0 || target >= slope_sup) {
        throw RootNotFoundError(
            "theta_root: required slope " + std::to_string(target) +
                " is unreachable; achievable supremum is " +
                std::to_string(df <= 0.0 ? 0.0 : slope_sup),
            df <= 0.0 ? 0.0 : slope_sup);
    }
    const double theta_cap = p.service().theta_max();
    double hi = std::isfinite(theta_cap) ? theta_cap - 1e-12 : 1.0;
    if (!std::isfinite(theta_cap)) {
        int iter = 0;
        while (log_mgf_v_dtheta(s, hi, p) < target && iter++ < 200) hi *= 2.0;
        if (iter >= 200)
            throw RootNotFoundError("theta_root: no sign change located", slope_sup);
    } else if (log_mgf_v_dtheta(s, hi, p) < target) {
        throw RootNotFoundError(
            "theta_root: slope at theta_max below target; achievable supremum is " +
                std::to_string(log_mgf_v_dtheta(s, hi, p)),
            log_mgf_v_dtheta(s, hi, p));
    }
    double lo = 0.0;
    // dv/dtheta is increasing in theta (v is convex), so bisection is safe;
    // run it down to adjacent doubles.
    for (int i = 0; i < 200 && std::nextafter(lo, hi) < hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (log_mgf_v_dtheta(s, mid, p) < target ? lo : hi) = mid;
    }
    const double theta = lo;
    // Guard the defining property. 1e-9 absolute where the target is O(1);
    // for large targets the attainable floor scales with the conditioning of
    // dv/dtheta (a double theta moves the slope by ~eps/(1-theta)^2), hence
    // the relative term.
    const double tol = std::max(1e-9, 5e-11 * target);
    if (std::abs(log_mgf_v_dtheta(s, theta, p) - target) > tol)
        throw RootNotFoundError("theta_root: residual above tolerance", slope_sup);
    return theta;
}

double rate_value(double s, const LdpProblem& p) {
    const double th = theta_root(s, p);
    return th * p.x() - log_mgf_v(s, th, p) + th * p.c_prime() * (p.horizon() - s);
}

RateProfile rate_profile(const LdpProblem& p, std::size_t grid_points) {
    RateProfile out;
    const double hi = p.horizon() - 1e-6;
    out.s.resize(grid_points);
    out.theta.resize(grid_points);
    out.rate.resize(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double s = hi * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        out.s[i] = s;
        out.theta[i] = theta_root(s, p);
        out.rate[i] = out.theta[i] * p.x() - log_mgf_v(s, out.theta[i], p) +
                      out.theta[i] * p.c_prime() * (p.horizon() - s);
    }
    const auto [ts, rs] = rate_minimize(p, grid_points);
    out.t_star = ts;
    out.rate_at_t_star = rs;
    return out;
}

std::pair<double, double> rate_minimize(const LdpProblem& p, std::size_t grid_points) {
    const double hi_end = p.horizon() - 1e-6;
    double best_s = 0.0;
    double best = rate_value(0.0, p);
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double s = hi_end * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double r = rate_value(s, p);
        if (r < best) {
            best = r;
            best_s = s;
        }
    }
    const double step = hi_end / static_cast<double>(grid_points - 1);
    double lo = std::max(0.0, best_s - step);
    double hi = std::min(hi_end, best_s + step);
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = rate_value(x1, p);
    double f2 = rate_value(x2, p);
    while (hi - lo > 1e-7) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = rate_value(x1, p);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = rate_value(x2, p);
        }
    }
    double s_min = 0.5 * (lo + hi);
    double r_min = rate_value(s_min, p);
    if (best < r_min) {
        s_min = best_s;
        r_min = best;
    }
    return {s_min, r_min};
}

TwistedLaw make_twisted_law(const LdpProblem& p) {
    TwistedLaw tw;
    const auto [ts, rate] = rate_minimize(p);
    (void)rate;
    tw.t_star = ts;
    tw.theta_star = theta_root(ts, p);
    tw.v_star = log_mgf_v(ts, tw.theta_star, p);
    tw.t = p.horizon();
    return tw;
}

double rare_event_path(double s, const TwistedLaw& tw, const LdpProblem& p) {
    const double ev1 = p.service().mean();
    const double env = std::exp(-tw.v_star);
    const double fs = p.scatter().cdf(s);
    if (s <= tw.t_star) return ev1 * fs * env;
    const double fstar = p.scatter().cdf(tw.t_star);
    return (ev1 * fstar + p.service().mgf_prime(tw.theta_star) * (fs - fstar)) * env;
}

std::pair<double, double> twisted_sample(const TwistedLaw& tw, const LdpProblem& p,
                                         RandomStream& rng) {
    const double f_star = p.scatter().cdf(tw.t_star);
    const double f_t = p.scatter().cdf(tw.t);
    const double df = f_t - f_star;
    const double phi = p.service().mgf(tw.theta_star);
    const double p_on = phi * df * std::exp(-tw.v_star);
    double tt, vv;
    if (rng.uniform() < p_on) {
        // arrival inside the tilted window, service exponentially tilted
        tt = p.scatter().quantile(f_star + rng.uniform() * df);
        vv = p.service().sample_tilted(tw.theta_star, rng);
    } else {
        double u = rng.uniform() * (1.0 - df);
        if (u >= f_star) u += df;
        tt = p.scatter().quantile(u);
        vv = p.service().sample(rng);
    }
    return {tt, vv};
}

namespace {

struct IsRep {
    double estimate = 0.0;
    double weight = 0.0;
};

IsRep run_is_rep(const LdpProblem& p, const TwistedLaw& tw, std::size_t n,
                 RandomStream& rng) {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(n);
    double gamma_window = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto [tt, vv] = twisted_sample(tw, p, rng);
        if (tt > tw.t_star && tt <= tw.t) gamma_window += vv;
        if (std::isfinite(tt) && tt <= tw.t) pairs.emplace_back(tt, vv);
    }
    std::sort(pairs.begin(), pairs.end());
    const double c = p.c_prime() * static_cast<double>(n);
    double w = 0.0;
    double prev = 0.0;
    for (const auto& [ti, vi] : pairs) {
        w = std::max(w - c * (ti - prev), 0.0) + vi;
        prev = ti;
    }
    w = std::max(w - c * (tw.t - prev), 0.0);
    IsRep rep;
    rep.weight = std::exp(-tw.theta_star * gamma_window +
                          static_cast<double>(n) * tw.v_star);
    rep.estimate = w > p.x() * static_cast<double>(n) ? rep.weight : 0.0;
    return rep;
}

TailEstimate summarize_reps(const std::vector<double>& vals) {
    TailEstimate est;
    est.reps = vals.size();
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double m2 = 0.0;
    for (double v : vals) m2 += (v - mean) * (v - mean);
    est.p_hat = mean;
    est.std_err = vals.size() > 1
                      ? std::sqrt(m2 / static_cast<double>(vals.size() - 1) /
                                  static_cast<double>(vals.size()))
                      : 0.0;
    return est;
}

} // namespace

TailEstimate is_estimate(const LdpProblem& p, std::size_t n, std::size_t reps,
                         std::uint64_t seed, std::uint64_t stream_base,
                         unsigned workers) {
    return is_estimate(p, make_twisted_law(p), n, reps, seed, stream_base, workers);
}

TailEstimate is_estimate(const LdpProblem& p, const TwistedLaw& tw, std::size_t n,
                         std::size_t reps, std::uint64_t seed,
                         std::uint64_t stream_base, unsigned workers) {
    if (reps == 0) throw PreconditionError("is_estimate: reps >= 1");
    std::vector<double> vals(reps, 0.0);
    parallel_for_index(reps, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        vals[k] = run_is_rep(p, tw, n, rng).estimate;
    });
    return summarize_reps(vals);
}

TailEstimate is_weight_mean(const LdpProblem& p, std::size_t n, std::size_t reps,
                            std::uint64_t seed, std::uint64_t stream_base,
                            unsigned workers) {
    if (reps == 0) throw PreconditionError("is_weight_mean: reps >= 1");
    const TwistedLaw tw = make_twisted_law(p);
    std::vector<double> vals(reps, 0.0);
    parallel_for_index(reps, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        vals[k] = run_is_rep(p, tw, n, rng).weight;
    });
    return summarize_reps(vals);
}

} // namespace rsq
