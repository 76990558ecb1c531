#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace rsq {

/// Step-function empirical CDF F_n(t) = #{T_i <= t}/n over a sorted sample.
/// Empty input evaluates to the constant 0 function.
class EmpiricalCdf {
public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> sorted_times)
        : times_(std::move(sorted_times)) {}

    static EmpiricalCdf from_unsorted(std::vector<double> times) {
        std::sort(times.begin(), times.end());
        return EmpiricalCdf(std::move(times));
    }

    double operator()(double t) const {
        if (times_.empty()) return 0.0;
        const auto it = std::upper_bound(times_.begin(), times_.end(), t);
        return static_cast<double>(it - times_.begin()) /
               static_cast<double>(times_.size());
    }

    std::size_t size() const { return times_.size(); }
    const std::vector<double>& data() const { return times_; }

private:
    std::vector<double> times_;
};

/// Kolmogorov-Smirnov distance between a sorted sample and a model CDF.
inline double ks_distance(const std::vector<double>& sorted_sample,
                          const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_sample.size();
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_sample[i]);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        ks = std::max(ks, std::max(f - lo, hi - f));
    }
    return ks;
}

struct MeanVar {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double std_error() const {
        return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
    }
};

inline MeanVar summarize(const std::vector<double>& xs) {
    MeanVar s;
    for (double x : xs) s.add(x);
    return s;
}

} // namespace rsq
