#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rsqueue/rng.hpp"

using rsq::RandomStream;

TEST_CASE("same (seed, stream) reproduces identical sequences") {
    RandomStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomStream c(42, 7), d(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(c.normal() == d.normal());
}

TEST_CASE("distinct streams pass the pairwise correlation smoke test") {
    const std::size_t n = 100000;
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{0, 1}, {1, 2}, {0, 7},
                                                             {3, 1000}};
    for (auto [i, j] : pairs) {
        RandomStream a(123, i), b(123, j);
        std::vector<double> ua(n), ub(n);
        for (std::size_t k = 0; k < n; ++k) {
            ua[k] = a.uniform();
            ub[k] = b.uniform();
        }
        CHECK(std::abs(oracle::sample_correlation(ua, ub)) < 0.01);
    }
}

TEST_CASE("uniform moments") {
    RandomStream rng(9, 0);
    std::vector<double> u(100000);
    for (auto& v : u) v = rng.uniform();
    CHECK(oracle::sample_mean(u) == doctest::Approx(0.5).epsilon(0.01));
    CHECK(oracle::sample_variance(u) == doctest::Approx(1.0 / 12.0).epsilon(0.03));
}

TEST_CASE("polar normals have the right moments and pass normality") {
    RandomStream rng(11, 0);
    std::vector<double> z(100000);
    for (auto& v : z) v = rng.normal();
    CHECK(std::abs(oracle::sample_mean(z)) < 3.0 / std::sqrt(100000.0));
    CHECK(oracle::sample_variance(z) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(oracle::jarque_bera(z) < 9.21); // 1% chi^2_2 critical value
}

TEST_CASE("exponential and gamma samplers match their moments") {
    RandomStream rng(13, 0);
    std::vector<double> e(200000);
    for (auto& v : e) v = rng.exponential(2.0);
    CHECK(oracle::sample_mean(e) == doctest::Approx(2.0).epsilon(0.02));
    CHECK(oracle::sample_variance(e) == doctest::Approx(4.0).epsilon(0.05));

    for (double shape : {0.5, 2.5}) {
        std::vector<double> g(200000);
        for (auto& v : g) v = rng.gamma(shape, 1.5);
        CHECK(oracle::sample_mean(g) == doctest::Approx(shape * 1.5).epsilon(0.02));
        CHECK(oracle::sample_variance(g) ==
              doctest::Approx(shape * 1.5 * 1.5).epsilon(0.05));
    }
}
