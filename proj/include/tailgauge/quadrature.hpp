#ifndef TAILGAUGE_QUADRATURE_HPP
#define TAILGAUGE_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "tailgauge/errors.hpp"

namespace tailgauge {

struct QuadratureSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::size_t max_subdivisions = 2000;
};

namespace detail {

// Gauss-Kronrod 7-15 pair (QUADPACK abscissae/weights on [-1,1]).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGk15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kGk15Nodes[i]);
        fv[14 - i] = f(c + h * kGk15Nodes[i]);
    }
    fv[7] = f(c);
    double kronrod = kGk15Weights[7] * fv[7];
    for (int i = 0; i < 7; ++i) kronrod += kGk15Weights[i] * (fv[i] + fv[14 - i]);
    double gauss = kG7Weights[3] * fv[7];
    for (int i = 0; i < 3; ++i) gauss += kG7Weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    value = kronrod * h;
    const double diff = std::abs(kronrod - gauss) * std::abs(h);
    error = diff;
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

} // namespace detail

// Adaptive bisection with a worst-interval-first queue; throws
// NumericalError when the subdivision budget is exhausted. `breakpoints`
// (strictly increasing, first/last are the integration limits) seed the
// queue so that a feature far smaller than the whole range cannot hide
// between the nodes of a single opening rule.
template <class F>
double integrate_adaptive(const F& f, const std::vector<double>& breakpoints,
                          const QuadratureSettings& s) {
    if (!(s.abs_tol > 0.0) || !(s.rel_tol > 0.0))
        throw SpecError("quadrature tolerances must be positive");
    if (breakpoints.size() < 2) throw SpecError("quadrature needs at least one interval");
    std::priority_queue<detail::Interval> queue;
    double total_value = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double v, e;
        detail::gk15(f, breakpoints[i], breakpoints[i + 1], v, e);
        queue.push({breakpoints[i], breakpoints[i + 1], v, e});
        total_value += v;
        total_error += e;
    }
    std::size_t subdivisions = 0;
    while (total_error > std::max(s.abs_tol, s.rel_tol * std::abs(total_value))) {
        if (++subdivisions > s.max_subdivisions)
            throw NumericalError("adaptive quadrature failed to converge");
        const detail::Interval worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        double v1, e1, v2, e2;
        detail::gk15(f, worst.a, mid, v1, e1);
        detail::gk15(f, mid, worst.b, v2, e2);
        total_value += v1 + v2 - worst.value;
        total_error += e1 + e2 - worst.error;
        queue.push({worst.a, mid, v1, e1});
        queue.push({mid, worst.b, v2, e2});
    }
    return total_value;
}

template <class F>
double integrate_adaptive(const F& f, double a, double b, const QuadratureSettings& s) {
    return integrate_adaptive(f, std::vector<double>{a, b}, s);
}

} // namespace tailgauge

#endif
