#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rsqueue/empirical.hpp"
#include "rsqueue/errors.hpp"
#include "rsqueue/ldp.hpp"
#include "rsqueue/quadrature.hpp"

using namespace rsq;

namespace {

LdpProblem example1() {
    return LdpProblem(ServiceModel::exponential(1.0), ScatterModel::uniform01(), 0.5,
                      0.5, 1.03);
}

LdpProblem example2() {
    return LdpProblem(ServiceModel::exponential(1.0), ScatterModel::exponential(1.0),
                      0.5, 1000.0, 5.6);
}

} // namespace

TEST_CASE("x-condition is enforced at construction") {
    // balanced uniform case has fluid threshold 0; x = 0 violates it
    CHECK_THROWS_AS(LdpProblem(ServiceModel::exponential(1.0), ScatterModel::uniform01(),
                               0.5, 0.0, 1.03),
                    PreconditionError);
    // underloaded case: threshold is positive
    CHECK_THROWS_AS(LdpProblem(ServiceModel::exponential(1.0), ScatterModel::uniform01(),
                               0.5, 0.2, 0.5),
                    PreconditionError);
}

TEST_CASE("log-MGF v: boundary values and the printed example value") {
    auto p = example1();
    for (double s : {0.0, 0.2, 0.45}) CHECK(log_mgf_v(s, 0.0, p) == 0.0);
    for (double th : {0.1, 0.5, 0.9})
        CHECK(log_mgf_v(0.5, th, p) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_mgf_v(0.2, 0.5, p) == doctest::Approx(std::log(1.3)).epsilon(1e-12));
    CHECK(log_mgf_v(0.2, 0.5, p) == doctest::Approx(0.26236).epsilon(1e-5));
}

TEST_CASE("log-MGF v matches a Monte Carlo of the windowed work transform") {
    // v(s,theta) = (1/n) log E e^{theta Gamma_n(s,t]}; use theta=0.3 so the
    // second moment of e^{theta Gamma} stays finite.
    auto p = example1();
    const double s = 0.2, theta = 0.3;
    const std::size_t n = 50, reps = 200000;
    double mean = 0.0, m2 = 0.0;
    for (std::size_t k = 0; k < reps; ++k) {
        RandomStream rng(81, k);
        const auto ow = sample_offered(p.service(), p.scatter(), n, rng);
        const double w = std::exp(theta * offered_work(ow, s, 0.5));
        mean += w;
        m2 += w * w;
    }
    mean /= reps;
    const double se = std::sqrt((m2 / reps - mean * mean) / reps);
    const double v_mc = std::log(mean) / n;
    const double v_se = se / mean / n; // delta method
    CHECK(std::abs(v_mc - log_mgf_v(s, theta, p)) < 3.0 * v_se);
}

TEST_CASE("theta root: corrected quadratic closed form at s = 0.4") {
    auto p = example1();
    const double s = 0.4;
    const double dlt = 0.5 - s;
    const double K = 0.5 + 1.03 * dlt;
    // K(1-dlt) th^2 - K(2-dlt) th + (K-dlt) = 0, smaller root
    const double A = K * (1.0 - dlt), B = K * (2.0 - dlt), C = K - dlt;
    const double closed = (B - std::sqrt(B * B - 4.0 * A * C)) / (2.0 * A);
    CHECK(std::abs(theta_root(s, p) - closed) < 1e-8);
    CHECK(closed == doctest::Approx(0.6227157635).epsilon(1e-8));
}

TEST_CASE("theta root: residual property and exponential-service bound") {
    auto p = example1();
    for (int i = 0; i < 20; ++i) {
        const double s = 0.4999 * i / 19.0;
        const double th = theta_root(s, p);
        CHECK(th < 1.0);
        CHECK(std::abs(log_mgf_v_dtheta(s, th, p) - 1.03 * (0.5 - s) - 0.5) <= 1e-9);
    }
}

TEST_CASE("theta root: unreachable slope names the achievable supremum") {
    // deterministic work V=1 caps dv/dtheta at 1; x = 10 is unreachable
    LdpProblem p(ServiceModel::deterministic(1.0), ScatterModel::uniform01(), 0.5, 10.0,
                 1.0);
    try {
        (void)theta_root(0.4, p);
        FAIL("expected RootNotFoundError");
    } catch (const RootNotFoundError& e) {
        CHECK(e.achievable_supremum == doctest::Approx(1.0));
    }
}

TEST_CASE("rate value: Legendre duality and positivity") {
    auto p = example1();
    for (double s : {0.0, 0.15, 0.35}) {
        const double direct = rate_value(s, p);
        CHECK(direct > 0.0);
        const double K = 0.5 + 1.03 * (0.5 - s);
        double sup = 0.0;
        for (int i = 1; i < 10000; ++i) {
            const double th = i / 10000.0 * (1.0 - 1e-9);
            sup = std::max(sup, th * K - log_mgf_v(s, th, p));
        }
        CHECK(std::abs(direct - sup) < 1e-6);
    }
}

TEST_CASE("example 1 rate profile is convex and minimized at the left endpoint") {
    auto p = example1();
    const auto prof = rate_profile(p, 1000);
    double prev_diff = -1e9;
    for (std::size_t i = 1; i < prof.s.size(); ++i) {
        const double diff = prof.rate[i] - prof.rate[i - 1];
        CHECK(diff >= prev_diff - 1e-9); // convexity: increasing differences
        prev_diff = diff;
    }
    // honest minimizer for the printed parameters: the left endpoint (frozen
    // oracle values t* = 0, I' = 0.118469); the printed 0.1 is not a minimum
    CHECK(prof.t_star < 0.005);
    CHECK(prof.rate_at_t_star == doctest::Approx(0.118469).epsilon(1e-4));
    CHECK(rate_value(0.1, p) == doctest::Approx(0.128687).epsilon(1e-4));
    CHECK(rate_value(0.1, p) > prof.rate_at_t_star);
}

TEST_CASE("example 2 minimizer is interior near 0.3") {
    auto p = example2();
    const auto [ts, rate] = rate_minimize(p);
    CHECK(std::abs(ts - 0.3047) < 5e-3);
    CHECK(std::abs(ts - 0.3) < 0.02);
    CHECK(rate == doctest::Approx(995.212).epsilon(1e-4));
}

TEST_CASE("minimizer is robust to the grid phase") {
    auto p = example2();
    const auto a = rate_minimize(p, 1000);
    const auto b = rate_minimize(p, 1337);
    CHECK(std::abs(a.first - b.first) < 1e-4);
}

TEST_CASE("rare-event path: boundaries, degenerate tilt, continuity, monotone") {
    auto p = example1();
    const TwistedLaw tw = make_twisted_law(p);
    CHECK(rare_event_path(0.0, tw, p) == 0.0);

    TwistedLaw degenerate{0.2, 0.0, 0.0, 0.5};
    for (double s : {0.1, 0.3, 0.5})
        CHECK(rare_event_path(s, degenerate, p) ==
              doctest::Approx(p.service().mean() * p.scatter().cdf(s)).epsilon(1e-14));

    const double eps = 1e-9;
    CHECK(std::abs(rare_event_path(tw.t_star - eps, tw, p) -
                   rare_event_path(tw.t_star + eps, tw, p)) < 1e-6);
    double prev = -1.0;
    for (int i = 0; i <= 60; ++i) {
        const double v = rare_event_path(0.5 * i / 60.0, tw, p);
        CHECK(v >= prev - 1e-14);
        prev = v;
    }
}

TEST_CASE("rare-event path matches the twisted-sampler average") {
    {
        // Example-1 parameters: absolute 0.01 band at 50 grid points. The
        // sampler variance makes 1e5 draws a ~1.5 sigma band, so use 1e6.
        auto p = example1();
        const TwistedLaw tw = make_twisted_law(p);
        const std::size_t draws = 1000000;
        std::vector<double> ts(draws), vs(draws);
        RandomStream rng(82, 0);
        for (std::size_t k = 0; k < draws; ++k) {
            auto [tt, vv] = twisted_sample(tw, p, rng);
            ts[k] = tt;
            vs[k] = vv;
        }
        for (int i = 1; i <= 50; ++i) {
            const double s = 0.5 * i / 50.0;
            double acc = 0.0;
            for (std::size_t k = 0; k < draws; ++k)
                if (ts[k] <= s) acc += vs[k];
            CHECK(std::abs(acc / draws - rare_event_path(s, tw, p)) < 0.01);
        }
    }
    {
        // Example-2 parameters: path values are O(x), compare relatively
        auto p = example2();
        const TwistedLaw tw = make_twisted_law(p);
        const std::size_t draws = 200000;
        RandomStream rng(182, 0);
        std::vector<double> ts(draws), vs(draws);
        for (std::size_t k = 0; k < draws; ++k) {
            auto [tt, vv] = twisted_sample(tw, p, rng);
            ts[k] = tt;
            vs[k] = vv;
        }
        for (double s : {0.2, 0.35, 0.5}) {
            double acc = 0.0, acc2 = 0.0;
            for (std::size_t k = 0; k < draws; ++k)
                if (ts[k] <= s) {
                    acc += vs[k];
                    acc2 += vs[k] * vs[k];
                }
            const double mean = acc / draws;
            const double se =
                std::sqrt((acc2 / draws - mean * mean) / static_cast<double>(draws));
            const double want = rare_event_path(s, tw, p);
            CHECK(std::abs(mean - want) <= 4.0 * se);
        }
    }
}

TEST_CASE("twisted law: normalization and tilted service conditional mean") {
    for (auto p : {example1(), example2()}) {
        const TwistedLaw tw = make_twisted_law(p);
        const double phi = p.service().mgf(tw.theta_star);
        const auto dens = [&](double s) {
            const bool on = s > tw.t_star && s <= tw.t;
            return p.scatter().density(s) * std::exp(-tw.v_star) * (on ? phi : 1.0);
        };
        // the density jumps at t* and t; integrate the smooth pieces
        const double hi = std::min(p.scatter().support_end(), 60.0);
        const double mass = integrate_gk(dens, 0.0, tw.t_star, 1e-13).value +
                            integrate_gk(dens, tw.t_star, tw.t, 1e-13).value +
                            integrate_gk(dens, tw.t, hi, 1e-13).value;
        CHECK(std::abs(mass - 1.0) < 1e-10);
    }
    // tilted conditional service mean on the window: phi'/phi
    auto p = example1();
    const TwistedLaw tw = make_twisted_law(p);
    RandomStream rng(83, 0);
    double sum = 0.0;
    std::size_t cnt = 0;
    for (std::size_t k = 0; k < 200000; ++k) {
        auto [tt, vv] = twisted_sample(tw, p, rng);
        if (tt > tw.t_star && tt <= tw.t) {
            sum += vv;
            ++cnt;
        }
    }
    const double want = p.service().mgf_prime(tw.theta_star) / p.service().mgf(tw.theta_star);
    CHECK(std::abs(sum / cnt - want) < 0.01);
    CHECK(want == doctest::Approx(1.0 / (1.0 - tw.theta_star)).epsilon(1e-12));
}

TEST_CASE("degenerate tilt reproduces the nominal marginals") {
    auto p = example1();
    TwistedLaw degenerate{0.2, 0.0, 0.0, 0.5};
    const std::size_t draws = 100000;
    std::vector<double> ts(draws), vs(draws);
    RandomStream rng(84, 0);
    for (std::size_t k = 0; k < draws; ++k) {
        auto [tt, vv] = twisted_sample(degenerate, p, rng);
        ts[k] = tt;
        vs[k] = vv;
    }
    std::sort(ts.begin(), ts.end());
    std::sort(vs.begin(), vs.end());
    CHECK(ks_distance(ts, [&](double u) { return p.scatter().cdf(u); }) <= 0.01);
    CHECK(ks_distance(vs, [](double v) { return v < 0 ? 0.0 : -std::expm1(-v); }) <=
          0.01);
}

TEST_CASE("IS estimator: unit weights under the degenerate tilt, crude agreement") {
    auto p = example1();
    TwistedLaw degenerate{0.2, 0.0, 0.0, 0.5};
    const auto is_deg = is_estimate(p, degenerate, 20, 50000, 85, 0, 1);
    TailSimProblem crude_p;
    crude_p.c_prime = 1.03;
    crude_p.x = 0.5;
    crude_p.t = 0.5;
    const auto crude = crude_tail_estimate(crude_p, 20, 100000, 86, 0, 1);
    CHECK(std::abs(is_deg.p_hat - crude.p_hat) <
          3.0 * std::sqrt(is_deg.std_err * is_deg.std_err +
                          crude.std_err * crude.std_err));
    // degenerate weights are exactly 1, so p_hat * reps is an integer count
    const double scaled = is_deg.p_hat * 50000.0;
    CHECK(std::abs(scaled - std::round(scaled)) < 1e-6);

    const auto is_opt = is_estimate(p, 20, 50000, 87, 0, 1);
    CHECK(std::abs(is_opt.p_hat - crude.p_hat) <
          3.0 * std::sqrt(is_opt.std_err * is_opt.std_err +
                          crude.std_err * crude.std_err));
    // the tilted estimator should be far more efficient
    CHECK(is_opt.std_err < crude.std_err);
}

TEST_CASE("IS weights average to one and the LDP slope trends to the rate") {
    auto p = example1();
    const auto lr = is_weight_mean(p, 20, 50000, 88, 0, 1);
    CHECK(std::abs(lr.p_hat - 1.0) < 3.0 * lr.std_err);

    const auto [ts, istar] = rate_minimize(p);
    (void)ts;
    double prev_gap = 1e9;
    for (std::size_t n : {20, 40, 80}) {
        const auto est = is_estimate(p, n, 50000, 89, 0, 1);
        const double slope = -std::log(est.p_hat) / static_cast<double>(n);
        const double gap = std::abs(slope - istar);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}
