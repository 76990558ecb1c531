#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rsqueue/gaussian_paths.hpp"

using namespace rsq;

TEST_CASE("bridge is pinned at both ends") {
    for (std::uint64_t s : {1ull, 2ull, 99ull}) {
        RandomStream rng(s, 0);
        const auto p = brownian_bridge_path(GridSpec(0.0, 1.0, 64), rng);
        CHECK(p.values.front() == 0.0);
        CHECK(p.values.back() == 0.0);
    }
}

TEST_CASE("bridge variance/covariance and marginal normality") {
    const std::size_t paths = 100000;
    const std::size_t m = 16;
    std::vector<std::vector<double>> at(m + 1, std::vector<double>(paths));
    for (std::size_t k = 0; k < paths; ++k) {
        RandomStream rng(31, k);
        const auto p = brownian_bridge_path(GridSpec(0.0, 1.0, m), rng);
        for (std::size_t i = 0; i <= m; ++i) at[i][k] = p.values[i];
    }
    // Var B0(1/2) = 1/4, Cov(B0(1/4), B0(3/4)) = 1/4 * (1 - 3/4) = 1/16
    CHECK(std::abs(oracle::sample_variance(at[8]) - 0.25) < 0.005);
    double cov = 0.0;
    for (std::size_t k = 0; k < paths; ++k) cov += at[4][k] * at[12][k];
    cov /= paths - 1;
    CHECK(std::abs(cov - 0.0625) < 0.005);
    // Jarque-Bera normality smoke test at 1% on every interior node
    for (std::size_t i = 1; i < m; ++i) CHECK(oracle::jarque_bera(at[i]) < 9.21);
}

TEST_CASE("z process: degenerate service consumes only the bridge source") {
    RandomStream a(32, 5), b(32, 5);
    const GridSpec grid(0.0, 1.0, 32);
    const auto z = z_process_path(ServiceModel::deterministic(2.0),
                                  ScatterModel::uniform01(), grid, a);
    const auto bb = brownian_bridge_path(grid, b);
    for (std::size_t i = 0; i <= grid.m; ++i)
        CHECK(z.values[i] == doctest::Approx(2.0 * bb.values[i]).epsilon(1e-12));
    // both consumed the same number of draws
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("z process variance identity at interior points and at t=1") {
    // F = identity, EV1 = 1, sigma_V^2 = 0.25:
    // Var Z(t) = 0.25 t + t(1-t); Var Z(1) = sigma_V^2.
    const std::size_t paths = 100000;
    const GridSpec grid(0.0, 1.0, 8);
    std::vector<double> z25(paths), z50(paths), z100(paths);
    for (std::size_t k = 0; k < paths; ++k) {
        RandomStream rng(33, k);
        const auto z = z_process_path(0.5, 1.0, ScatterModel::uniform01(), grid, rng);
        z25[k] = z.values[2];
        z50[k] = z.values[4];
        z100[k] = z.values[8];
    }
    CHECK(std::abs(oracle::sample_variance(z25) - (0.25 * 0.25 + 0.25 * 0.75)) < 0.01);
    CHECK(std::abs(oracle::sample_variance(z50) - (0.25 * 0.5 + 0.25)) < 0.01);
    CHECK(std::abs(oracle::sample_variance(z100) - 0.25) < 0.01);
}

TEST_CASE("exact cell extrema samplers match the bridge-maximum law") {
    // pinned cell (a=b=0, sig2=1, dt=1): E max = sqrt(pi/8)
    RandomStream rng(34, 0);
    const std::size_t n = 200000;
    double mean_max = 0.0, mean_min = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_max += cell_maximum(0.0, 0.0, 1.0, 1.0, rng);
        mean_min += cell_minimum(0.0, 0.0, 1.0, 1.0, rng);
    }
    mean_max /= n;
    mean_min /= n;
    CHECK(std::abs(mean_max - std::sqrt(M_PI / 8.0)) < 0.005);
    CHECK(std::abs(mean_min + std::sqrt(M_PI / 8.0)) < 0.005);
    // max >= endpoints always
    for (int i = 0; i < 1000; ++i) {
        const double mx = cell_maximum(0.3, -0.2, 2.0, 0.1, rng);
        CHECK(mx >= 0.3);
    }
}
