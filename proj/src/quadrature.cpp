#include "rsqueue/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace rsq {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double a, b, value, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

Interval eval_gk(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double res_k = kWgk[7] * fc;
    double res_g = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fs = f(c - dx) + f(c + dx);
        res_k += kWgk[i] * fs;
        if (i % 2 == 1) res_g += kWg[i / 2] * fs;
    }
    res_k *= h;
    res_g *= h;
    const double err = std::pow(200.0 * std::abs(res_k - res_g), 1.5);
    return {a, b, res_k, std::min(err, std::abs(res_k - res_g) * 200.0)};
}

} // namespace

QuadratureResult integrate_gk(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, std::size_t max_subdiv) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Interval> heap;
    heap.push(eval_gk(f, a, b));
    double total = heap.top().value;
    double total_err = heap.top().err;
    std::size_t n = 1;
    while (total_err > abs_tol && n < max_subdiv) {
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Interval left = eval_gk(f, worst.a, mid);
        Interval right = eval_gk(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++n;
    }
    out.value = total;
    out.error_estimate = total_err;
    out.subdivisions = n;
    out.converged = total_err <= abs_tol;
    return out;
}

} // namespace rsq
