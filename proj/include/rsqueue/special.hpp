#pragma once

#include <cmath>

namespace rsq {

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kSqrt2Pi = 2.5066282746310002;

inline double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / kSqrt2Pi;
}

// Standard normal CDF via erfc, accurate in both tails.
inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / kSqrt2);
}

// Survival function 1 - Phi(x).
inline double norm_sf(double x) {
    return 0.5 * std::erfc(x / kSqrt2);
}

inline double clamp01(double x) {
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

inline double sqr(double x) { return x * x; }

} // namespace rsq
