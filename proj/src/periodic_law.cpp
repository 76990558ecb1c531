#include "rsqueue/periodic_law.hpp"

#include <cmath>

#include "rsqueue/distributions.hpp"
#include "rsqueue/errors.hpp"
#include "rsqueue/gaussian_paths.hpp"
#include "rsqueue/parallel.hpp"
#include "rsqueue/quadrature.hpp"
#include "rsqueue/special.hpp"

namespace rsq {

double PeriodicGaussParams::ev1() const {
    const double v = ev1_sq - sigma_v2;
    if (v <= 0.0) throw PreconditionError("PeriodicGaussParams: need sigma_V^2 < EV1^2... (EV1)^2 must be positive");
    return std::sqrt(v);
}

int PeriodicGaussParams::slot_index() const {
    return static_cast<int>(std::ceil(t - 1e-12));
}

double periodic_fluid(double s, double t, double ev1, const ScatterModel& scatter) {
    if (!(s >= 0.0) || !(s < t)) throw PreconditionError("periodic_fluid: need 0 <= s < t");
    const auto slot = [](double u) {
        return u <= 0.0 ? 1 : static_cast<int>(std::ceil(u - 1e-12));
    };
    const int ps = slot(s), pt = slot(t);
    const double fs = scatter.cdf(s - static_cast<double>(ps - 1));
    const double ft = scatter.cdf(t - static_cast<double>(pt - 1));
    return ev1 * static_cast<double>(pt - ps) + ev1 * (ft - fs);
}

GridPath periodic_z_path(const PeriodicGaussParams& params, std::size_t cells_per_slot,
                         std::size_t num_slots, RandomStream& rng) {
    if (num_slots == 0 || cells_per_slot == 0)
        throw PreconditionError("periodic_z_path: need at least one slot and one cell");
    const double sv = std::sqrt(params.sigma_v2);
    const double ev1 = params.ev1();
    GridSpec grid(0.0, static_cast<double>(num_slots), num_slots * cells_per_slot);
    GridPath path(grid);
    const double dt = 1.0 / static_cast<double>(cells_per_slot);
    const double sdt = std::sqrt(dt);
    double base = 0.0; // sigma_V * sum of completed-slot normals xi_l = B_l(1)
    std::vector<double> bm(cells_per_slot + 1);
    std::size_t node = 0;
    path[node++] = 0.0;
    for (std::size_t l = 0; l < num_slots; ++l) {
        // service-fluctuation BM; its endpoint is the slot's xi_l
        bm[0] = 0.0;
        for (std::size_t i = 1; i <= cells_per_slot; ++i)
            bm[i] = bm[i - 1] + sdt * rng.normal();
        // arrival-fluctuation bridge
        double w = 0.0;
        std::vector<double> wpath(cells_per_slot + 1, 0.0);
        for (std::size_t i = 1; i <= cells_per_slot; ++i) {
            w += sdt * rng.normal();
            wpath[i] = w;
        }
        for (std::size_t i = 1; i <= cells_per_slot; ++i) {
            const double u = static_cast<double>(i) * dt;
            const double bridge = wpath[i] - u * wpath[cells_per_slot];
            path[node++] = base + sv * bm[i] + ev1 * bridge;
        }
        base += sv * bm[cells_per_slot];
    }
    return path;
}

double phi_steady(double lambda, double a, double sigma_v2, double ev1_sq) {
    if (lambda < 0.0) return 0.0;
    const double e = -2.0 * lambda * (lambda + a) / ev1_sq +
                     2.0 * lambda * lambda * sigma_v2 / (ev1_sq * ev1_sq);
    return clamp01(-std::expm1(e));
}

double det_service_steady(double x) {
    if (x < 0.0) throw PreconditionError("det_service_steady: x >= 0");
    return -std::expm1(-2.0 * x * (1.0 + x));
}

namespace {

// Raw phi expression clamped to [0,1] as a value. The raw form is negative only
// on a middle band of its first argument and tends to 1 as the argument goes to
// -infinity, which is what the bounded-convergence step of the transient->steady
// limit uses; clamping the value keeps the integrand a probability.
double phi_raw_clamped(double lambda, double a, double sigma_v2, double ev1_sq) {
    const double e = -2.0 * lambda * (lambda + a) / ev1_sq +
                     2.0 * lambda * lambda * sigma_v2 / (ev1_sq * ev1_sq);
    return clamp01(-std::expm1(e));
}

} // namespace

double periodic_transient_cdf(double lambda, const PeriodicGaussParams& params,
                              bool* steady_warn) {
    if (params.t < 1.0) throw PreconditionError("periodic_transient_cdf: t >= 1");
    if (steady_warn) *steady_warn = !params.steady_state_valid();
    if (lambda < 0.0) return 0.0;
    const int pt = params.slot_index();
    const double phi0 = phi_steady(lambda, params.a, params.sigma_v2, params.ev1_sq);
    if (pt == 1) return phi0; // first-period reduction is exact
    const double sv = std::sqrt(params.sigma_v2);
    const double scale = sv * static_cast<double>(pt - 1);
    const auto integrand = [&](double x) {
        return phi_raw_clamped(lambda - scale * x, params.a, params.sigma_v2,
                               params.ev1_sq) *
               norm_pdf(x);
    };
    const auto r = integrate_gk(integrand, params.a, params.a + 40.0, 1e-9, (1u << 15));
    return clamp01(phi0 * norm_cdf(params.a) + r.value);
}

double periodic_steady_cdf(double lambda, const PeriodicGaussParams& params) {
    if (!params.steady_state_valid())
        throw PreconditionError("periodic_steady_cdf: requires sigma_V^2 < EV1^2");
    if (lambda < 0.0) return 0.0;
    const double e = -2.0 * lambda * (lambda + params.a) / params.ev1_sq +
                     2.0 * lambda * lambda * params.sigma_v2 /
                         (params.ev1_sq * params.ev1_sq);
    return clamp01(1.0 - norm_cdf(params.a) * std::exp(e));
}

std::vector<double> periodic_gauss_workload_mc(const PeriodicGaussParams& params,
                                               std::size_t paths,
                                               std::size_t cells_per_slot,
                                               std::uint64_t seed,
                                               std::uint64_t stream_base,
                                               unsigned workers) {
    if (params.t < 1.0) throw PreconditionError("periodic_gauss_workload_mc: t >= 1");
    const double sv = std::sqrt(params.sigma_v2);
    const double ev1 = params.ev1();
    const double sig2 = params.ev1_sq; // within-cell vol^2 = sigma_V^2 + (EV1)^2
    const std::size_t full = static_cast<std::size_t>(std::floor(params.t + 1e-12));
    const double frac = params.t - static_cast<double>(full);
    const std::size_t frac_cells =
        static_cast<std::size_t>(std::llround(frac * static_cast<double>(cells_per_slot)));
    std::vector<double> out(paths, 0.0);
    parallel_for_index(paths, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        const double dt = 1.0 / static_cast<double>(cells_per_slot);
        const double sdt = std::sqrt(dt);
        thread_local std::vector<double> bm, wp;
        bm.assign(cells_per_slot + 1, 0.0);
        wp.assign(cells_per_slot + 1, 0.0);
        double base = 0.0;   // accumulated Z~ value at the slot boundary minus drift
        double runmin = 0.0; // running infimum of Z~(s) - a s
        const std::size_t slots = full + (frac_cells > 0 ? 1 : 0);
        for (std::size_t l = 0; l < slots; ++l) {
            const std::size_t cells =
                (l < full) ? cells_per_slot : frac_cells;
            for (std::size_t i = 1; i <= cells_per_slot; ++i)
                bm[i] = bm[i - 1] + sdt * rng.normal();
            double w = 0.0;
            for (std::size_t i = 1; i <= cells_per_slot; ++i) {
                w += sdt * rng.normal();
                wp[i] = w;
            }
            const double w1 = wp[cells_per_slot];
            double prev = base;
            for (std::size_t i = 1; i <= cells; ++i) {
                const double u = static_cast<double>(i) * dt;
                const double val =
                    base + sv * bm[i] + ev1 * (wp[i] - u * w1) - params.a * u;
                runmin = std::min(runmin, cell_minimum(prev, val, sig2, dt, rng));
                prev = val;
            }
            base = prev;
        }
        out[k] = base - std::min(runmin, 0.0);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rsq
