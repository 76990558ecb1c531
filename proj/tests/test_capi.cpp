#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "rsqueue/rsqueue.h"

TEST_CASE("version string") {
    CHECK(std::strlen(rsq_version()) > 0);
}

TEST_CASE("service handles: moments, mgf, domain errors") {
    rsq_service* s = nullptr;
    REQUIRE(rsq_service_create_exponential(1.0, &s) == RSQ_OK);
    CHECK(rsq_service_mean(s) == 1.0);
    CHECK(rsq_service_scv(s) == 1.0);
    CHECK(rsq_service_theta_max(s) == 1.0);
    double v = 0.0;
    CHECK(rsq_service_mgf(s, 0.5, &v) == RSQ_OK);
    CHECK(v == doctest::Approx(2.0));
    CHECK(rsq_service_mgf(s, 1.5, &v) == RSQ_ERR_DOMAIN);
    CHECK(std::string(rsq_last_error()).find("theta_max") != std::string::npos);
    std::vector<double> draws(1000);
    CHECK(rsq_service_sample(s, 7, 3, draws.size(), draws.data()) == RSQ_OK);
    for (double d : draws) CHECK(d >= 0.0);
    rsq_service_free(s);

    CHECK(rsq_service_create_exponential(-1.0, &s) == RSQ_ERR_PRECONDITION);
    CHECK(rsq_service_mgf(nullptr, 0.0, &v) == RSQ_ERR_INVALID_ARG);
}

TEST_CASE("scatter handles: sub-probability composition and arrivals") {
    rsq_scatter* base = nullptr;
    rsq_scatter* sub = nullptr;
    REQUIRE(rsq_scatter_create_uniform01(&base) == RSQ_OK);
    REQUIRE(rsq_scatter_create_sub_probability(base, 0.5, &sub) == RSQ_OK);
    CHECK(rsq_scatter_deficit(sub) == 0.5);
    CHECK(rsq_scatter_cdf(sub, 1.0) == doctest::Approx(0.5));
    double q = 0.0;
    CHECK(rsq_scatter_quantile(sub, 0.8, &q) == RSQ_OK);
    CHECK(std::isinf(q));
    std::vector<double> times(10000);
    size_t count = 0;
    CHECK(rsq_scatter_sample_arrivals(sub, times.size(), 11, 0, times.data(), &count) ==
          RSQ_OK);
    CHECK(count > 4500);
    CHECK(count < 5500);
    for (size_t i = 1; i < count; ++i) CHECK(times[i] >= times[i - 1]);
    rsq_scatter_free(sub);
    rsq_scatter_free(base);
}

TEST_CASE("bridge path and reflection through the C surface") {
    std::vector<double> path(65);
    REQUIRE(rsq_brownian_bridge_path(64, 5, 9, path.data()) == RSQ_OK);
    CHECK(path.front() == 0.0);
    CHECK(path.back() == 0.0);
    std::vector<double> reflected(65);
    REQUIRE(rsq_reflection_map(path.data(), path.size(), reflected.data()) == RSQ_OK);
    for (double w : reflected) CHECK(w >= 0.0);
    // reproducibility through the C API
    std::vector<double> again(65);
    REQUIRE(rsq_brownian_bridge_path(64, 5, 9, again.data()) == RSQ_OK);
    CHECK(std::memcmp(path.data(), again.data(), path.size() * sizeof(double)) == 0);
}

TEST_CASE("transient law: closed equals quadrature, bridge values") {
    double closed = 0.0, quad = 0.0, bridge = 0.0;
    REQUIRE(rsq_transient_cdf_closed(0.8, 0.5, 0.5, 0.5, 1.25, &closed) == RSQ_OK);
    REQUIRE(rsq_transient_cdf_quadrature(0.8, 0.5, 0.5, 0.5, 1.25, &quad) == RSQ_OK);
    CHECK(std::abs(closed - quad) < 1e-8);
    REQUIRE(rsq_reflected_bridge_cdf(0.5, 0.5, 0.0, &bridge) == RSQ_OK);
    CHECK(bridge == doctest::Approx(0.538079).epsilon(1e-5));
    CHECK(rsq_reflected_bridge_cdf(0.5, 1.5, 0.0, &bridge) == RSQ_ERR_DOMAIN);
    double gi = 0.0;
    REQUIRE(rsq_gauss_phi_integral(1.0, 0.0, 0.0, &gi) == RSQ_OK);
    CHECK(gi == doctest::Approx(std::sqrt(M_PI) / 2.0));
}

TEST_CASE("ldp handle: precondition, minimizer, rare path, IS") {
    rsq_service* service = nullptr;
    rsq_scatter* scatter = nullptr;
    REQUIRE(rsq_service_create_exponential(1.0, &service) == RSQ_OK);
    REQUIRE(rsq_scatter_create_exponential(1.0, &scatter) == RSQ_OK);

    rsq_ldp* bad = nullptr;
    CHECK(rsq_ldp_create(service, scatter, 0.5, 0.0, 5.6, &bad) == RSQ_ERR_PRECONDITION);

    rsq_ldp* p = nullptr;
    REQUIRE(rsq_ldp_create(service, scatter, 0.5, 1000.0, 5.6, &p) == RSQ_OK);
    double ts = 0.0, rate = 0.0;
    REQUIRE(rsq_ldp_minimize(p, &ts, &rate) == RSQ_OK);
    CHECK(ts == doctest::Approx(0.3047).epsilon(0.02));

    double s_grid[3] = {0.1, 0.3, 0.5};
    double pathvals[3] = {0, 0, 0};
    REQUIRE(rsq_ldp_rare_event_path(p, s_grid, 3, pathvals) == RSQ_OK);
    CHECK(pathvals[0] <= pathvals[1]);
    CHECK(pathvals[1] <= pathvals[2]);

    double th = 0.0;
    REQUIRE(rsq_ldp_theta_root(p, 0.3, &th) == RSQ_OK);
    CHECK(th > 0.99);
    CHECK(th < 1.0);
    rsq_ldp_free(p);
    rsq_scatter_free(scatter);
    rsq_service_free(service);
}

TEST_CASE("tail asymptotics through the C surface") {
    double ts = 0.0, a = 0.0, h = 0.0;
    REQUIRE(rsq_t_star(1.0, 1.0, 0.5, &ts) == RSQ_OK);
    CHECK(ts == doctest::Approx(1.5 / 3.5));
    REQUIRE(rsq_curvature_A(1.0, 1.0, 0.5, &a) == RSQ_OK);
    CHECK(a == doctest::Approx(1.333889).epsilon(1e-5));
    REQUIRE(rsq_pickands_h(2, &h) == RSQ_OK);
    CHECK(h == doctest::Approx(1.0 / std::sqrt(M_PI)));
    CHECK(rsq_pickands_h(3, &h) == RSQ_ERR_DOMAIN);
}

TEST_CASE("periodic laws through the C surface") {
    double v = 0.0;
    int warn = -1;
    REQUIRE(rsq_phi_steady(1.0, 0.5, 0.25, 1.0, &v) == RSQ_OK);
    CHECK(v == doctest::Approx(1.0 - std::exp(-2.5)));
    REQUIRE(rsq_periodic_transient_cdf(1.0, 1.0, 0.5, 0.25, 1.0, &warn, &v) == RSQ_OK);
    CHECK(warn == 0);
    CHECK(v == doctest::Approx(1.0 - std::exp(-2.5)));
    REQUIRE(rsq_det_service_steady(1.0, &v) == RSQ_OK);
    CHECK(v == doctest::Approx(1.0 - std::exp(-4.0)));
}

TEST_CASE("crude estimator determinism across worker counts") {
    rsq_service* service = nullptr;
    rsq_scatter* scatter = nullptr;
    REQUIRE(rsq_service_create_exponential(1.0, &service) == RSQ_OK);
    REQUIRE(rsq_scatter_create_uniform01(&scatter) == RSQ_OK);
    double p1 = 0, s1 = 0, p8 = 0, s8 = 0;
    REQUIRE(rsq_crude_tail_estimate(service, scatter, 0.5, 0.5, 0.1, 100, 5000, 3, 1,
                                    &p1, &s1) == RSQ_OK);
    REQUIRE(rsq_crude_tail_estimate(service, scatter, 0.5, 0.5, 0.1, 100, 5000, 3, 8,
                                    &p8, &s8) == RSQ_OK);
    CHECK(p1 == p8);
    CHECK(s1 == s8);
    rsq_scatter_free(scatter);
    rsq_service_free(service);
}

TEST_CASE("validation entry point honours overrides and reports JSON") {
    char* report = nullptr;
    int all_pass = -1;
    // criterion 5 alone passes at quick scale
    REQUIRE(rsq_validate_run(R"({"scale":"quick","only":[5],"seed":99})", &report,
                             &all_pass) == RSQ_OK);
    REQUIRE(report != nullptr);
    std::string text(report);
    rsq_string_free(report);
    CHECK(all_pass == 1);
    CHECK(text.find("\"criteria\"") != std::string::npos);
    CHECK(text.find("c5.sup_gap") != std::string::npos);

    // forced failure: corrupt the tolerance
    report = nullptr;
    REQUIRE(rsq_validate_run(
                R"({"scale":"quick","only":[5],"seed":99,"tolerance_overrides":{"c5.sup_gap":0.0}})",
                &report, &all_pass) == RSQ_OK);
    std::string text2(report);
    rsq_string_free(report);
    CHECK(all_pass == 0);
    CHECK(text2.find("\"pass\": false") != std::string::npos);
}
