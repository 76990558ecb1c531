#include "rsqueue/tail_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rsqueue/errors.hpp"
#include "rsqueue/gaussian_paths.hpp"
#include "rsqueue/parallel.hpp"
#include "rsqueue/rng.hpp"
#include "rsqueue/special.hpp"

namespace rsq {

double TailProblem::t_star_unclipped() const {
    const double v = scv + 1.0;
    return x * v / (c * v + 2.0 * x);
}

double variance_time_curve(double t, double scv) {
    if (t < 0.0 || t > 1.0) throw DomainError("variance_time_curve: t outside [0,1]");
    return std::sqrt(t * (scv + 1.0 - t));
}

double m_curve(double t, const TailProblem& p) {
    if (t <= 0.0) return std::numeric_limits<double>::infinity();
    if (t > 1.0) throw DomainError("m_curve: t outside (0,1]");
    return (p.c * t + p.x) / variance_time_curve(t, p.scv);
}

double t_star(const TailProblem& p) {
    const double u = p.t_star_unclipped();
    return u >= 1.0 ? 1.0 : u;
}

double curvature_A(const TailProblem& p) {
    if (p.boundary())
        throw PreconditionError(
            "curvature_A: boundary regime (t* = 1); use the one-sided variant of the "
            "prefactor directly");
    const double v = p.scv + 1.0;
    const double s = variance_time_curve(t_star(p), p.scv);
    return v * v / (8.0 * s * s * s * s);
}

double curvature_A_printed(const TailProblem& p) {
    const double v = p.scv + 1.0;
    return 0.25 * p.x * v * v * v * (p.c * v + p.x) / sqr(p.c * v + 2.0 * p.x);
}

double corr_D(const TailProblem& p) {
    const double v = p.scv + 1.0;
    const double s = variance_time_curve(t_star(p), p.scv);
    return v / (2.0 * s * s);
}

double corr_D_printed(const TailProblem& p) { return 0.5 * (p.scv + 1.0); }

double pickands_H(int alpha) {
    if (alpha == 1) return 1.0;
    if (alpha == 2) return 1.0 / std::sqrt(M_PI);
    throw DomainError("pickands_H: only alpha in {1,2} supported");
}

double piterbarg_prefactor(double alpha, double beta, double D, double sigma, double A) {
    if (!(beta > alpha) || !(alpha > 0.0))
        throw PreconditionError("piterbarg_prefactor: need beta > alpha > 0");
    if (!(D > 0.0) || !(A > 0.0) || !(sigma > 0.0))
        throw PreconditionError("piterbarg_prefactor: need D, sigma, A > 0");
    const double h_alpha = pickands_H(static_cast<int>(alpha));
    return std::tgamma(1.0 / beta) * std::pow(D, 1.0 / alpha) *
           std::pow(sigma, 1.0 / beta) * h_alpha /
           (std::sqrt(2.0 * M_PI) * beta * std::pow(A, 1.0 / beta));
}

double tail_prob_asymptotic(double m_level, const TailProblem& p) {
    if (!(m_level > 0.0)) throw PreconditionError("tail_prob_asymptotic: level > 0");
    // alpha = 1, beta = 2: polynomial exponent 2/beta - 2/alpha + 1 = 0.
    const double base = std::exp(-0.5 * m_level * m_level);
    if (p.boundary()) {
        // one-sided variant at t* = 1 with the same constant structure
        const double v = p.scv + 1.0;
        const double s1 = variance_time_curve(1.0, p.scv);
        const double D = v / (2.0 * s1 * s1);
        // curvature of m(t*)/m(t) at the right endpoint, one-sided
        const double h = 1e-6;
        const double m1 = m_curve(1.0, p);
        const double st = [&] {
            const double f0 = m1 / m_curve(1.0, p);
            const double f1 = m1 / m_curve(1.0 - h, p);
            const double f2 = m1 / m_curve(1.0 - 2.0 * h, p);
            return -(f2 - 2.0 * f1 + f0) / (h * h) / 2.0;
        }();
        const double A = std::max(st, 1e-12);
        return piterbarg_prefactor(1.0, 2.0, D, 1.0, A) * base;
    }
    return 2.0 * piterbarg_prefactor(1.0, 2.0, corr_D(p), 1.0, curvature_A(p)) * base;
}

double tail_prob_raw_level(const TailProblem& p) {
    return tail_prob_asymptotic(m_curve(t_star(p), p), p);
}

TailMcResult tail_prob_mc(const TailProblem& p, std::size_t paths, std::size_t grid_m,
                          std::uint64_t seed, std::uint64_t stream_base,
                          unsigned workers) {
    const double cs = std::sqrt(p.scv);
    const double sig2 = p.scv + 1.0;
    const std::size_t m = grid_m;
    std::vector<std::uint8_t> hit(paths, 0);
    parallel_for_index(paths, workers, [&](std::size_t k) {
        RandomStream rng(seed, stream_base + k);
        const double dt = 1.0 / static_cast<double>(m);
        const double sdt = std::sqrt(dt);
        thread_local std::vector<double> b;
        b.assign(m + 1, 0.0);
        for (std::size_t i = 1; i <= m; ++i) b[i] = b[i - 1] + sdt * rng.normal();
        const double b1 = b[m];
        double prev = 0.0;
        double runmax = 0.0;
        double w = 0.0;
        for (std::size_t i = 1; i <= m; ++i) {
            const double u = static_cast<double>(i) * dt;
            w += cs * sdt * rng.normal();
            const double xv = w + (b[i] - u * b1) - p.c * u;
            runmax = std::max(runmax, cell_maximum(prev, xv, sig2, dt, rng));
            prev = xv;
            if (runmax > p.x) {
                hit[k] = 1;
                break;
            }
        }
    });
    std::size_t s = 0;
    for (auto h : hit) s += h;
    TailMcResult out;
    out.p_hat = static_cast<double>(s) / static_cast<double>(paths);
    out.std_err = std::sqrt(std::max(out.p_hat * (1.0 - out.p_hat), 0.0) /
                            static_cast<double>(paths));
    return out;
}

} // namespace rsq
