#pragma once

// Numerical quadrature oracle for real-line integrals. Two engines:
//
//  * tanh-sinh on the mapped line: the interval is mapped onto (-1,1) and
//    integrated with tanh-sinh nodes; the composite substitution collapses to
//    x = sinh(pi sinh u)/2 with weight (pi/2) cosh(u) cosh(pi sinh u). Good
//    for smooth integrands decaying at least like 1/x^2 (rationals, damped
//    Gaussians).
//  * adaptive bisection with oscillation-aware panels: for integrands with a
//    cos(omega x) factor the line is split at the zeros of the oscillation;
//    panel integrals form an alternating sequence whose partial sums are
//    accelerated by repeated averaging.
//
// Both engines are deterministic: fixed node schedules, summation in a fixed
// order.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace negdim {

enum class Transform { tanh_sinh, oscillatory_panels };

struct QuadratureRequest {
    std::function<double(double)> integrand;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    Transform transform = Transform::tanh_sinh;
    double omega = 0.0;  // oscillation frequency, used by the panel engine
    std::int64_t max_evaluations = 2'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

namespace detail {

class EvalCounter {
public:
    EvalCounter(const std::function<double(double)>& f, std::int64_t budget)
        : f_(f), budget_(budget) {}

    double operator()(double x) {
        if (count_ >= budget_)
            throw ToleranceNotReached("quadrature evaluation budget exhausted after " +
                                      std::to_string(count_) + " samples");
        ++count_;
        double v = f_(x);
        if (!std::isfinite(v))
            throw NonFiniteSample("integrand returned a non-finite value at x = " +
                                  std::to_string(x));
        return v;
    }

    std::int64_t count() const { return count_; }

private:
    const std::function<double(double)>& f_;
    std::int64_t budget_;
    std::int64_t count_ = 0;
};

// One tanh-sinh sample of the transformed real-line integrand.
inline double de_sample(EvalCounter& f, double u) {
    double s = M_PI * std::sinh(u);  // = 2 * (pi/2) sinh u
    if (std::abs(s) > 690.0) return 0.0;  // weight * decay underflows first
    double x = 0.5 * std::sinh(s);
    double w = 0.5 * M_PI * std::cosh(u) * std::cosh(s);
    double v = f(x);
    return w * v;
}

inline QuadratureResult integrate_tanh_sinh(const QuadratureRequest& req) {
    EvalCounter f(req.integrand, req.max_evaluations);
    constexpr double u_max = 5.0;
    constexpr int max_level = 12;

    double h = 1.0;
    double sum = de_sample(f, 0.0);
    for (int j = 1; j * h <= u_max; ++j)
        sum += de_sample(f, j * h) + de_sample(f, -j * h);
    double estimate = h * sum;
    double previous = estimate;
    double err = std::abs(estimate);

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int j = 1; j * h <= u_max; j += 2)
            add += de_sample(f, j * h) + de_sample(f, -j * h);
        estimate = 0.5 * previous + h * add;
        err = std::abs(estimate - previous);
        double scale = std::max(req.abs_tol, req.rel_tol * std::abs(estimate));
        if (level >= 3 && err <= scale) {
            return {estimate, err, f.count()};
        }
        previous = estimate;
    }
    throw ToleranceNotReached("tanh-sinh refinement stalled at error " + std::to_string(err));
}

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration.
inline const std::vector<std::pair<double, double>>& gauss_legendre_24() {
    static const std::vector<std::pair<double, double>> table = [] {
        const int n = 24;
        std::vector<std::pair<double, double>> nodes(n);
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
        }
        return nodes;
    }();
    return table;
}

inline double gl24(EvalCounter& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (const auto& [x, w] : gauss_legendre_24()) acc += w * f(mid + half * x);
    return half * acc;
}

// Adaptive bisection around the origin where the integrand still varies on a
// scale unrelated to the oscillation period.
inline double adaptive_panel(EvalCounter& f, double a, double b, double tol, int depth) {
    double whole = gl24(f, a, b);
    double mid = 0.5 * (a + b);
    double split = gl24(f, a, mid) + gl24(f, mid, b);
    if (std::abs(whole - split) <= tol || depth >= 24) return split;
    return adaptive_panel(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive_panel(f, mid, b, 0.5 * tol, depth + 1);
}

inline QuadratureResult integrate_oscillatory(const QuadratureRequest& req) {
    if (!(req.omega > 0))
        throw Error("oscillatory transform requires omega > 0");
    EvalCounter f(req.integrand, req.max_evaluations);

    const double half_period = M_PI / req.omega;
    const double x0 = 0.5 * half_period;  // first zero of cos(omega x)
    const double tol = std::max(req.abs_tol, 0.0);

    double central = adaptive_panel(f, -x0, x0, 0.25 * std::max(tol, 1e-14), 0);

    // Partial sums of symmetric panel pairs, accelerated by repeated
    // averaging (row n of the triangle; the last entry is the estimate).
    const int max_panels = 400;
    const int max_depth = 24;
    std::vector<double> row;
    double partial = central;
    double estimate = central;
    double err = std::numeric_limits<double>::infinity();

    for (int k = 0; k < max_panels; ++k) {
        double lo = x0 + k * half_period;
        double hi = lo + half_period;
        double panel = gl24(f, lo, hi) + gl24(f, -hi, -lo);
        partial += panel;

        std::vector<double> next(std::min<std::size_t>(row.size() + 1, max_depth + 1));
        next[0] = partial;
        for (std::size_t j = 1; j < next.size(); ++j) next[j] = 0.5 * (row[j - 1] + next[j - 1]);
        double candidate = next.back();
        err = std::abs(candidate - estimate);
        estimate = candidate;
        row = std::move(next);

        double scale = std::max(req.abs_tol, req.rel_tol * std::abs(estimate));
        if (k >= 8 && err <= 0.5 * scale && std::abs(panel) < 10 * scale + 1.0)
            return {estimate, err, f.count()};
    }
    throw ToleranceNotReached("oscillatory panel summation stalled at error " +
                              std::to_string(err));
}

} // namespace detail

/// Evaluate a real-line integral with the engine selected by the request.
inline QuadratureResult integrate_numeric(const QuadratureRequest& req) {
    if (!(req.abs_tol > 0) || !(req.rel_tol > 0))
        throw Error("integrate_numeric: tolerances must be positive");
    if (!req.integrand) throw Error("integrate_numeric: missing integrand");
    switch (req.transform) {
        case Transform::tanh_sinh: return detail::integrate_tanh_sinh(req);
        case Transform::oscillatory_panels: return detail::integrate_oscillatory(req);
    }
    throw Error("integrate_numeric: unknown transform");
}

} // namespace negdim
