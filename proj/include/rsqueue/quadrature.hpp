#pragma once

#include <cstddef>
#include <functional>

namespace rsq {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b] to an absolute tolerance.
/// Worst intervals are bisected first; max_subdiv caps the interval count.
QuadratureResult integrate_gk(const std::function<double(double)>& f, double a,
                              double b, double abs_tol = 1e-9,
                              std::size_t max_subdiv = (1u << 15));

} // namespace rsq
