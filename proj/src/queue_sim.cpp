#include "rsqueue/queue_sim.hpp"

#include <algorithm>
#include <cmath>

#include "rsqueue/errors.hpp"
#include "rsqueue/parallel.hpp"

namespace rsq {

OfferedWork sample_offered(const ServiceModel& service, const ScatterModel& scatter,
                           std::size_t n, RandomStream& rng) {
    OfferedWork ow;
    auto arr = scatter.sample_arrivals(n, rng);
    ow.arrivals = std::move(arr.times);
    ow.total_drawn = arr.total_drawn;
    ow.works.resize(ow.arrivals.size());
    for (auto& w : ow.works) {
        w = service.sample(rng);
        ow.total += w;
    }
    return ow;
}

double offered_work(const OfferedWork& ow, double s, double t) {
    if (s >= t) throw PreconditionError("offered_work: need s < t");
    const auto lo = std::upper_bound(ow.arrivals.begin(), ow.arrivals.end(), s);
    const auto hi = std::upper_bound(ow.arrivals.begin(), ow.arrivals.end(), t);
    double sum = 0.0;
    for (auto it = lo; it != hi; ++it)
        sum += ow.works[static_cast<std::size_t>(it - ow.arrivals.begin())];
    return sum;
}

double offered_cov(const ServiceModel& service, const ScatterModel& scatter,
                   std::size_t n, double s1, double s2, double t1, double t2) {
    if (s1 >= s2 || t1 >= t2) throw PreconditionError("offered_cov: invalid intervals");
    if (t1 < s1) {
        std::swap(s1, t1);
        std::swap(s2, t2);
    }
    const double p1 = scatter.cdf(s2) - scatter.cdf(s1);
    const double p2 = scatter.cdf(t2) - scatter.cdf(t1);
    const double hi = std::min(s2, t2);
    const double pov = t1 < hi ? scatter.cdf(hi) - scatter.cdf(t1) : 0.0;
    const double ev = service.mean();
    return static_cast<double>(n) * (service.second_moment() * pov - ev * ev * p1 * p2);
}

double workload_at(const OfferedWork& ow, double c, double t) {
    double w = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < ow.arrivals.size(); ++i) {
        const double ti = ow.arrivals[i];
        if (ti > t) break;
        w = std::max(w - c * (ti - prev), 0.0) + ow.works[i];
        prev = ti;
    }
    return std::max(w - c * (t - prev), 0.0);
}

WorkloadRealization workload_path(const OfferedWork& ow, std::size_t n, double c,
                                  const GridSpec& grid) {
    if (c <= 0.0) throw PreconditionError("workload_path: need c > 0");
    if (!ow.arrivals.empty() && ow.arrivals.back() > grid.t1)
        throw PreconditionError("workload_path: grid must cover all arrivals");
    WorkloadRealization out;
    out.path = GridPath(grid);
    out.n = n;
    out.c = c;

    double w = 0.0;
    double prev = grid.t0;
    std::size_t i = 0;
    for (std::size_t g = 0; g <= grid.m; ++g) {
        const double tg = grid.time(g);
        while (i < ow.arrivals.size() && ow.arrivals[i] <= tg) {
            const double ti = ow.arrivals[i];
            if (ti >= grid.t0) {
                w = std::max(w - c * (ti - prev), 0.0) + ow.works[i];
                prev = ti;
            }
            ++i;
        }
        out.path[g] = std::max(w - c * (tg - prev), 0.0);
    }
    return out;
}

OfferedWork sample_periodic_offered(const PeriodicConfig& cfg,
                                    const ServiceModel& service, RandomStream& rng) {
    if (cfg.period <= 0.0 || cfg.num_periods == 0)
        throw PreconditionError("periodic config: need period > 0 and num_periods >= 1");
    if (cfg.scatter.support_end() > cfg.period * (1.0 + 1e-12))
        throw PreconditionError("periodic config: scattering must be supported within one period");

    OfferedWork all;
    std::vector<double> base;
    if (cfg.coupling == ArrivalCoupling::Shared) {
        base = cfg.scatter.sample_arrivals(cfg.n, rng).times;
    }
    for (std::size_t l = 0; l < cfg.num_periods; ++l) {
        const double off = cfg.period * static_cast<double>(l);
        const std::vector<double>* slot = &base;
        std::vector<double> fresh;
        if (cfg.coupling == ArrivalCoupling::Fresh) {
            fresh = cfg.scatter.sample_arrivals(cfg.n, rng).times;
            slot = &fresh;
        }
        for (double ti : *slot) {
            all.arrivals.push_back(ti + off);
            const double v = service.sample(rng);
            all.works.push_back(v);
            all.total += v;
        }
        all.total_drawn += cfg.n;
    }
    return all;
}

WorkloadRealization periodic_workload_path(const PeriodicConfig& cfg,
                                           const ServiceModel& service, double c,
                                           const GridSpec& grid, RandomStream& rng) {
    const OfferedWork ow = sample_periodic_offered(cfg, service, rng);
    return workload_path(ow, cfg.n, c, grid);
}

TailEstimate crude_tail_estimate(const TailSimProblem& problem, std::size_t n,
                                 std::size_t reps, std::uint64_t seed,
                                 std::uint64_t stream_base, unsigned workers) {
    if (reps == 0) throw PreconditionError("crude_tail_estimate: reps >= 1");
    std::vector<std::uint8_t> hit(reps, 0);
    const double c = problem.c_prime * static_cast<double>(n);
    const double level = problem.x * static_cast<double>(n);
    parallel_for_index(reps, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        const OfferedWork ow = sample_offered(problem.service, problem.scatter, n, rng);
        hit[k] = workload_at(ow, c, problem.t) > level ? 1 : 0;
    });
    std::size_t s = 0;
    for (auto h : hit) s += h;
    TailEstimate est;
    est.reps = reps;
    est.p_hat = static_cast<double>(s) / static_cast<double>(reps);
    est.std_err = std::sqrt(std::max(est.p_hat * (1.0 - est.p_hat), 0.0) /
                            static_cast<double>(reps));
    return est;
}

} // namespace rsq
