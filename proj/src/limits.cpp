#include "rsqueue/limits.hpp"

#include <algorithm>
#include <cmath>

#include "rsqueue/empirical.hpp"
#include "rsqueue/errors.hpp"
#include "rsqueue/gaussian_paths.hpp"
#include "rsqueue/parallel.hpp"
#include "rsqueue/queue_sim.hpp"
#include "rsqueue/transient_law.hpp"

namespace rsq {

GridPath reflection_map(const GridPath& x) {
    GridPath out(x.spec);
    double runmin = x.values.empty() ? 0.0 : x.values[0];
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        runmin = std::min(runmin, x.values[i]);
        out[i] = x.values[i] - runmin;
    }
    return out;
}

namespace {

double netput(double s, double t, const ServiceModel& service,
              const ScatterModel& scatter, double rho) {
    return service.mean() * (scatter.cdf(t) - scatter.cdf(s)) - rho * (t - s);
}

} // namespace

double fluid_workload(double t, const ServiceModel& service,
                      const ScatterModel& scatter, double rho) {
    if (t < 0.0) throw PreconditionError("fluid_workload: t must be >= 0");
    if (t == 0.0) return 0.0;
    const std::size_t grid_n = 10000;
    double best = 0.0; // s = t gives 0
    std::size_t best_i = grid_n;
    for (std::size_t i = 0; i <= grid_n; ++i) {
        const double s = t * static_cast<double>(i) / static_cast<double>(grid_n);
        const double g = netput(s, t, service, scatter, rho);
        if (g > best) {
            best = g;
            best_i = i;
        }
    }
    // golden-section refinement around the best grid cell
    const double step = t / static_cast<double>(grid_n);
    double lo = best_i == 0 ? 0.0 : (static_cast<double>(best_i) - 1.0) * step;
    double hi = std::min(t, (static_cast<double>(best_i) + 1.0) * step);
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = netput(x1, t, service, scatter, rho);
    double f2 = netput(x2, t, service, scatter, rho);
    while (hi - lo > 1e-8) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = netput(x1, t, service, scatter, rho);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = netput(x2, t, service, scatter, rho);
        }
    }
    return std::max(best, std::max(f1, f2));
}

GridPath diffusion_workload_path(const Regime& regime, const GridSpec& grid,
                                 RandomStream& rng) {
    if (grid.t0 != 0.0) throw PreconditionError("diffusion_workload_path: grid starts at 0");
    // Z with F = b * identity realized through a sub-probability uniform law.
    ScatterModel scatter = regime.b < 1.0
                               ? ScatterModel::sub_probability(ScatterModel::uniform01(),
                                                               1.0 - regime.b)
                               : ScatterModel::uniform01();
    GridPath z = z_process_path(regime.sigma_v, regime.ev1, scatter, grid, rng);
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double t = z.spec.time(i);
        z[i] += regime.ev1 * (regime.q(t) - regime.a * t);
    }
    return reflection_map(z);
}

double fclt_gap(std::size_t n, const ServiceModel& service,
                const ScatterModel& scatter, const Regime& regime,
                std::size_t reps, double t_query, std::uint64_t seed,
                std::uint64_t stream_base, unsigned workers) {
    if (reps < 1000) throw PreconditionError("fclt_gap: reps >= 1e3");
    const double sqn = std::sqrt(static_cast<double>(n));
    const double c = static_cast<double>(n) * service.mean() * regime.b + regime.a * sqn;
    std::vector<double> w(reps, 0.0);
    parallel_for_index(reps, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        const OfferedWork ow = sample_offered(service, scatter, n, rng);
        w[k] = workload_at(ow, c, t_query) / sqn;
    });
    std::sort(w.begin(), w.end());
    ReflectedLawParams p;
    p.t = t_query;
    p.d = regime.a * service.mean();
    p.sigma_v = std::sqrt(service.variance());
    p.ev1_sq = service.second_moment();
    // The quadrature evaluator is authoritative but costly per point; verify
    // the closed form tracks it to 1e-8 over the sample range, then use it.
    const double hi_l = w.back() + 0.5;
    for (int i = 0; i <= 16; ++i) {
        ReflectedLawParams q = p;
        q.lambda = hi_l * static_cast<double>(i) / 16.0;
        if (std::abs(reflected_diffusion_cdf_quadrature(q) -
                     reflected_diffusion_cdf_closed(q)) > 1e-8)
            throw DomainError("fclt_gap: closed form drifted from quadrature");
    }
    return ks_distance(w, [&](double lam) {
        ReflectedLawParams q = p;
        q.lambda = lam;
        return reflected_diffusion_cdf_closed(q);
    });
}

} // namespace rsq
