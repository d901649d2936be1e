#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casimir::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;   // conservative absolute error estimate
    int evaluations = 0;
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double value, double error, int evaluations)
        : std::runtime_error(what), value(value), error(error), evaluations(evaluations) {}
    double value;
    double error;
    int evaluations;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
inline constexpr double gk_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk_weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gauss_weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double lo, hi, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gk15(F&& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f_center = f(center);
    double kronrod = gk_weights[7] * f_center;
    double gauss = gauss_weights[3] * f_center;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * gk_nodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += gk_weights[j] * sum;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 on [lo, hi]. Stops once the summed
/// segment error drops below max(rel_tol*|value|, abs_tol); throws
/// QuadratureError when the evaluation budget runs out first.
template <class F>
Result integrate_adaptive(F&& f, double lo, double hi, double rel_tol,
                          double abs_tol = 0.0, int max_evaluations = 200000) {
    if (!(hi > lo)) return {0.0, 0.0, 0};

    std::priority_queue<detail::Segment> queue;
    detail::Segment whole = detail::gk15(f, lo, hi);
    double total = whole.value;
    double error = whole.error;
    double stuck_error = 0.0; // segments too narrow to split further
    int evaluations = 15;
    queue.push(whole);

    auto tolerance = [&] { return std::max(rel_tol * std::abs(total), abs_tol); };

    while (error + stuck_error > tolerance() && !queue.empty()) {
        if (evaluations + 30 > max_evaluations)
            throw QuadratureError("adaptive quadrature: evaluation budget exhausted",
                                  total, error + stuck_error, evaluations);
        const detail::Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo) || !(mid < worst.hi)) {
            error -= worst.error;
            stuck_error += worst.error;
            continue;
        }
        const detail::Segment left = detail::gk15(f, worst.lo, mid);
        const detail::Segment right = detail::gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        evaluations += 30;
        queue.push(left);
        queue.push(right);
    }
    return {total, error + stuck_error, evaluations};
}

/// Trapezoid rule on a strictly increasing grid after the substitution
/// u = ln(x): integral of f dx = integral of x f(x) du.
inline double trapezoid_log_grid(const std::vector<double>& x,
                                 const std::vector<double>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double du = std::log(x[i + 1]) - std::log(x[i]);
        sum += 0.5 * du * (x[i] * f[i] + x[i + 1] * f[i + 1]);
    }
    return sum;
}

} // namespace casimir::quadrature
