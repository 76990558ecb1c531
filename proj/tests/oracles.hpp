#pragma once

// Test-only oracles, kept independent of the library implementations they
// check: brute-force reflection, adaptive Simpson quadrature, golden-section
// minimization and small statistics helpers.

#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

/// O(m^2) double-loop sup_{s<=t}(x(t)-x(s)) at every grid node.
std::vector<double> brute_force_reflection(const std::vector<double>& x);

/// Recursive adaptive Simpson to an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 40);

/// Golden-section minimizer of f on [lo, hi] to the given width.
double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double tol);

/// Central finite difference of f at x.
double central_diff(const std::function<double(double)>& f, double x, double h);

/// Jarque-Bera statistic n(skew^2/6 + (kurtosis-3)^2/24).
double jarque_bera(const std::vector<double>& xs);

double sample_mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);
double sample_correlation(const std::vector<double>& a, const std::vector<double>& b);

} // namespace oracle
