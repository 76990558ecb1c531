#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rsq {

/// Uniform time grid [t0, t1] split into m cells (m+1 nodes).
struct GridSpec {
    double t0 = 0.0;
    double t1 = 1.0;
    std::size_t m = 0;

    GridSpec() = default;
    GridSpec(double t0_, double t1_, std::size_t m_) : t0(t0_), t1(t1_), m(m_) {
        if (!(t1 > t0) || m == 0) throw std::invalid_argument("GridSpec: need t1 > t0 and m > 0");
    }

    double dt() const { return (t1 - t0) / static_cast<double>(m); }
    std::size_t nodes() const { return m + 1; }
    double time(std::size_t i) const {
        return t0 + (t1 - t0) * (static_cast<double>(i) / static_cast<double>(m));
    }
};

/// A function sampled on a uniform grid; carrier for Brownian/bridge/Z/workload paths.
struct GridPath {
    GridSpec spec;
    std::vector<double> values; // length spec.m + 1

    GridPath() = default;
    explicit GridPath(const GridSpec& s) : spec(s), values(s.nodes(), 0.0) {}

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
};

} // namespace rsq
