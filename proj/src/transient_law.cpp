#include "rsqueue/transient_law.hpp"

#include <algorithm>
#include <cmath>

#include "rsqueue/errors.hpp"
#include "rsqueue/gaussian_paths.hpp"
#include "rsqueue/parallel.hpp"
#include "rsqueue/quadrature.hpp"
#include "rsqueue/rng.hpp"
#include "rsqueue/special.hpp"

namespace rsq {

double reflected_bridge_cdf(double lambda, double t, double d) {
    if (!(t > 0.0) || t > 1.0)
        throw DomainError("reflected_bridge_cdf: t must lie in (0,1]");
    if (lambda < 0.0) return 0.0;
    if (t >= 1.0 - 1e-12)
        return clamp01(-std::expm1(-2.0 * lambda * (lambda + d)));
    const double s = std::sqrt(t * (1.0 - t));
    const double term1 = norm_cdf((lambda + d * t) / s);
    const double term2 = std::exp(-2.0 * lambda * (lambda + d)) *
                         norm_cdf((lambda * (2.0 * t - 1.0) + d * t) / s);
    return clamp01(term1 - term2);
}

double reflected_bridge_cdf_printed(double lambda, double t, double d) {
    const double s = std::sqrt(t * (1.0 - t));
    return norm_cdf((lambda * (1.0 - 2.0 * t) + d * t) / s) -
           std::exp(2.0 * lambda * (lambda - d)) * norm_cdf((-lambda + d * t) / s);
}

double gauss_phi_integral(double a, double b, double c) {
    if (!(a > 0.0)) throw DomainError("gauss_phi_integral: need a > 0");
    return std::sqrt(M_PI / a) * norm_cdf(c * std::sqrt(2.0 * a / (2.0 * a + b * b)));
}

double gauss_phi_integral_printed(double a, double b, double c) {
    return std::sqrt(2.0 * M_PI / a) * norm_cdf(c * std::sqrt(a / (a + b * b)));
}

double reflected_diffusion_cdf_closed(const ReflectedLawParams& p) {
    if (!(p.t > 0.0) || p.t > 1.0)
        throw DomainError("reflected_diffusion_cdf: t must lie in (0,1]");
    if (!(p.ev1_sq > 0.0)) throw DomainError("reflected_diffusion_cdf: EV1^2 must be > 0");
    if (p.lambda < 0.0) return 0.0;
    const double sstar = std::sqrt(p.ev1_sq);
    const double l = p.lambda / sstar;
    const double d = p.d / sstar;
    const double sp = p.sigma_v / sstar;
    const double t = p.t;
    if (sp == 0.0) return reflected_bridge_cdf(l, t, d);
    const double st = std::sqrt(t * (1.0 - t) + sp * sp * t * t);
    const double term1 = norm_cdf((l + d * t) / st);
    const double expo = -2.0 * l * (l + d) + 2.0 * l * l * sp * sp;
    const double term2 =
        std::exp(expo) * norm_cdf((l * (2.0 * t - 1.0 - 2.0 * sp * sp * t) + d * t) / st);
    return clamp01(term1 - term2);
}

double reflected_diffusion_cdf_printed(const ReflectedLawParams& p) {
    // Symbols as printed: alpha = 1/2, beta = -sigma_v t / sqrt(t(1-t)),
    // gamma = (lambda(1-2t) + c t)/sqrt(t(1-t)) with c the drift.
    const double t = p.t, lam = p.lambda, sv = p.sigma_v, c = p.d;
    const double alpha = 0.5;
    const double s = std::sqrt(t * (1.0 - t));
    const double beta = -sv * t / s;
    const double gamma = (lam * (1.0 - 2.0 * t) + c * t) / s;
    const double first = (1.0 / std::sqrt(alpha)) *
                         norm_cdf(gamma * std::sqrt(alpha / (alpha + beta * beta)));
    const double second =
        std::exp(2.0 * lam * lam * (1.0 + sv * sv) - 2.0 * lam * c) *
        norm_cdf((gamma - 2.0 * lam * std::sqrt(t / (1.0 - t)) + 2.0 * beta * lam * sv) *
                 std::sqrt(2.0 * alpha * alpha / (2.0 * alpha * alpha + beta * beta)));
    return first + second;
}

double reflected_diffusion_cdf_quadrature(const ReflectedLawParams& p) {
    if (!(p.t > 0.0) || p.t > 1.0)
        throw DomainError("reflected_diffusion_cdf: t must lie in (0,1]");
    if (!(p.ev1_sq > 0.0)) throw DomainError("reflected_diffusion_cdf: EV1^2 must be > 0");
    if (p.lambda < 0.0) return 0.0;
    const double sstar = std::sqrt(p.ev1_sq);
    const double l = p.lambda / sstar;
    const double d = p.d / sstar;
    const double sp = p.sigma_v / sstar;
    if (sp == 0.0) return reflected_bridge_cdf(l, p.t, d);
    const auto integrand = [&](double x) {
        return reflected_bridge_cdf(l, p.t, d - sp * x) * norm_pdf(x);
    };
    // beyond |x| = 10 the Gaussian weight is below 1e-22
    const auto r = integrate_gk(integrand, -10.0, 10.0, 1e-9, (1u << 15));
    return clamp01(r.value);
}

double slowly_varying_limit_cdf(double lambda, double t, double q0, double a,
                                double ev1, double sigma_v, double ev1_sq) {
    ReflectedLawParams p;
    p.lambda = lambda;
    p.t = t;
    p.d = ev1 * (a - q0);
    p.sigma_v = sigma_v;
    p.ev1_sq = ev1_sq;
    return reflected_diffusion_cdf_closed(p);
}

std::vector<double> reflected_diffusion_mc_cdf(const std::vector<double>& lambdas,
                                               double t, double d, double sigma_v,
                                               double ev1_sq, std::size_t paths,
                                               std::size_t grid_m, std::uint64_t seed,
                                               std::uint64_t stream_base,
                                               unsigned workers) {
    if (!(t > 0.0) || t > 1.0) throw DomainError("reflected_diffusion_mc_cdf: t in (0,1]");
    const double sstar = std::sqrt(ev1_sq);
    const std::size_t m = grid_m;
    const std::size_t kq = static_cast<std::size_t>(std::llround(t * static_cast<double>(m)));
    std::vector<double> w(paths, 0.0);
    parallel_for_index(paths, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        const double dt = 1.0 / static_cast<double>(m);
        const double sdt = std::sqrt(dt);
        // Z - d e = s* B0 + (sigma_v xi - d) e, conditional on xi = B1(1).
        const double xi = sigma_v > 0.0 ? rng.normal() : 0.0;
        const double slope = sigma_v * xi - d;
        // raw BM for the bridge
        std::vector<double> b(m + 1, 0.0);
        for (std::size_t i = 1; i <= m; ++i) b[i] = b[i - 1] + sdt * rng.normal();
        const double b1 = b[m];
        double prev = 0.0;
        double runmin = 0.0;
        double x_at_q = 0.0;
        const double sig2 = sstar * sstar;
        for (std::size_t i = 1; i <= kq; ++i) {
            const double u = static_cast<double>(i) * dt;
            const double x = sstar * (b[i] - u * b1) + slope * u;
            runmin = std::min(runmin, cell_minimum(prev, x, sig2, dt, rng));
            prev = x;
        }
        x_at_q = prev;
        w[k] = x_at_q - std::min(runmin, 0.0);
    });
    std::sort(w.begin(), w.end());
    std::vector<double> cdf(lambdas.size(), 0.0);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        const auto it = std::upper_bound(w.begin(), w.end(), lambdas[j]);
        cdf[j] = static_cast<double>(it - w.begin()) / static_cast<double>(paths);
    }
    return cdf;
}

} // namespace rsq
