#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsqueue/errors.hpp"
#include "rsqueue/special.hpp"
#include "rsqueue/transient_law.hpp"

using namespace rsq;

TEST_CASE("reflected bridge CDF: pinned values and limits") {
    // lambda = 0: the reflected process is a.s. positive
    for (double t : {0.2, 0.5, 0.9})
        for (double d : {-0.5, 0.0, 0.5})
            CHECK(reflected_bridge_cdf(0.0, t, d) == doctest::Approx(0.0).epsilon(1e-14));

    // d=0, t=1/2, lambda=1/2: Phi(1) - e^{-1/2} Phi(0)
    const double want = norm_cdf(1.0) - std::exp(-0.5) * 0.5;
    CHECK(reflected_bridge_cdf(0.5, 0.5, 0.0) == doctest::Approx(want).epsilon(1e-12));
    CHECK(reflected_bridge_cdf(0.5, 0.5, 0.0) == doctest::Approx(0.538079).epsilon(1e-5));

    // Doob limit at t -> 1
    CHECK(reflected_bridge_cdf(1.0, 1.0 - 1e-8, 0.0) ==
          doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-6));
    for (double d : {-0.4, 0.0, 0.7})
        for (double lam : {0.3, 1.0, 2.0})
            CHECK(std::abs(reflected_bridge_cdf(lam, 1.0 - 1e-8, d) -
                           clamp01(-std::expm1(-2.0 * lam * (lam + d)))) < 1e-6);

    CHECK(reflected_bridge_cdf(-0.5, 0.5, 0.0) == 0.0);
    CHECK_THROWS_AS((void)reflected_bridge_cdf(0.5, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS((void)reflected_bridge_cdf(0.5, 1.5, 0.0), DomainError);
}

TEST_CASE("reflected bridge CDF: monotone in lambda and in the drain rate") {
    for (double t : {0.25, 0.6}) {
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double v = reflected_bridge_cdf(0.03 * i, t, 0.2);
            CHECK(v >= prev - 1e-14);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            prev = v;
        }
        double prev_d = -1.0;
        for (int i = 0; i <= 40; ++i) {
            const double v = reflected_bridge_cdf(0.6, t, -1.0 + 0.05 * i);
            CHECK(v >= prev_d - 1e-14);
            prev_d = v;
        }
    }
}

TEST_CASE("printed lemma constants disagree with the re-derived law") {
    // documented reference: the printed form fails its own t -> 1 limit
    const double printed = reflected_bridge_cdf_printed(0.5, 0.5, 0.0);
    const double derived = reflected_bridge_cdf(0.5, 0.5, 0.0);
    CHECK(std::abs(printed - derived) > 0.2);
}

TEST_CASE("gauss_phi_integral closed form vs adaptive Simpson") {
    CHECK(gauss_phi_integral(1.0, 0.0, 0.0) ==
          doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));
    CHECK(gauss_phi_integral(1.0, 0.0, 1.0) ==
          doctest::Approx(std::sqrt(M_PI) * norm_cdf(1.0)).epsilon(1e-12));
    for (const auto& [a, b, c] : {std::tuple{0.5, 1.0, 0.3}, std::tuple{2.0, -1.5, 0.7},
                                  std::tuple{1.3, 0.4, -0.6}}) {
        const double quad = oracle::adaptive_simpson(
            [&](double x) { return std::exp(-a * x * x) * norm_cdf(b * x + c); }, -40.0,
            40.0, 1e-12);
        CHECK(std::abs(gauss_phi_integral(a, b, c) - quad) < 1e-10);
    }
    CHECK_THROWS_AS((void)gauss_phi_integral(0.0, 1.0, 1.0), DomainError);
    // the printed constants fail the b = 0 reduction
    const double printed = gauss_phi_integral_printed(1.0, 0.0, 0.0);
    CHECK(std::abs(printed - std::sqrt(M_PI) / 2.0) > 0.1);
}

TEST_CASE("closed transient law equals the quadrature evaluator") {
    double worst = 0.0;
    for (double t : {0.2, 0.5, 0.8})
        for (double d : {-0.5, 0.0, 0.5})
            for (double lam : {0.2, 0.7, 1.8}) {
                ReflectedLawParams p{t, lam, d, 0.5, 1.25};
                worst = std::max(worst, std::abs(reflected_diffusion_cdf_closed(p) -
                                                 reflected_diffusion_cdf_quadrature(p)));
            }
    CHECK(worst < 1e-9);
}

TEST_CASE("sigma_V = 0 reduces the diffusion law to the bridge law exactly") {
    for (double lam : {0.1, 0.6, 1.4}) {
        ReflectedLawParams p{0.4, lam, 0.3, 0.0, 1.0};
        CHECK(reflected_diffusion_cdf_closed(p) ==
              doctest::Approx(reflected_bridge_cdf(lam, 0.4, 0.3)).epsilon(1e-15));
        CHECK(reflected_diffusion_cdf_quadrature(p) ==
              doctest::Approx(reflected_bridge_cdf(lam, 0.4, 0.3)).epsilon(1e-12));
    }
}

TEST_CASE("tails and frozen regression value") {
    ReflectedLawParams big{0.5, 8.0, 0.5, 0.5, 1.25};
    CHECK(reflected_diffusion_cdf_closed(big) >= 1.0 - 1e-6);
    // frozen after the quadrature oracle run: lambda'=0.5, t=0.5, d'=0, sigma'=0.5
    ReflectedLawParams reg{0.5, 0.5, 0.0, 0.5, 1.0};
    CHECK(reflected_diffusion_cdf_closed(reg) ==
          doctest::Approx(0.531612033328).epsilon(1e-9));
}

TEST_CASE("printed section-4 constants are reference-only") {
    ReflectedLawParams p{0.5, 0.8, 0.3, 0.5, 1.0};
    CHECK(std::abs(reflected_diffusion_cdf_printed(p) -
                   reflected_diffusion_cdf_closed(p)) > 0.05);
}

TEST_CASE("slowly-varying corollary wiring") {
    // q0 = 0 reduces to the closed law at d = a EV1
    const double a = 0.4, ev1 = 1.2, sv = 0.5, ev1sq = ev1 * ev1 + sv * sv;
    for (double lam : {0.2, 0.9}) {
        ReflectedLawParams p{0.5, lam, a * ev1, sv, ev1sq};
        CHECK(slowly_varying_limit_cdf(lam, 0.5, 0.0, a, ev1, sv, ev1sq) ==
              doctest::Approx(reflected_diffusion_cdf_closed(p)).epsilon(1e-15));
    }
    // q0 = a cancels the drift
    for (double lam : {0.2, 0.9}) {
        ReflectedLawParams p0{0.5, lam, 0.0, sv, ev1sq};
        CHECK(slowly_varying_limit_cdf(lam, 0.5, a, a, ev1, sv, ev1sq) ==
              doctest::Approx(reflected_diffusion_cdf_closed(p0)).epsilon(1e-15));
    }
}

TEST_CASE("diffusion CDF monotone in lambda over a parameter sweep") {
    for (double t : {0.3, 0.7})
        for (double d : {-0.4, 0.4}) {
            double prev = -1.0;
            for (int i = 0; i <= 100; ++i) {
                ReflectedLawParams p{t, 0.03 * i, d, 0.6, 1.36};
                const double v = reflected_diffusion_cdf_closed(p);
                CHECK(v >= prev - 1e-14);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                prev = v;
            }
        }
}
