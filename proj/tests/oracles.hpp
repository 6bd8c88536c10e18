#pragma once

// Test-only reference computations, independent of the library's
// closed-form paths.

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "ginar/cls.hpp"

namespace ginar::oracle {

/// Minimizes a convex quadratic objective by cyclic coordinate descent.
/// Each coordinate step fits a parabola through three objective values and
/// jumps to its vertex, which is exact for a quadratic. Only objective
/// evaluations are used; no normal equations are formed.
inline std::vector<double> minimize_quadratic(const std::function<double(std::span<const double>)>& f,
                                              std::vector<double> x, double tol = 1e-13,
                                              int max_sweeps = 200000) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double largest_step = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double h = std::max(1.0, std::fabs(x[i]));
            const double x0 = x[i];
            const double f0 = f(x);
            x[i] = x0 + h;
            const double fp = f(x);
            x[i] = x0 - h;
            const double fm = f(x);
            const double curvature = fp - 2 * f0 + fm;
            const double step = curvature > 0 ? -h * (fp - fm) / (2 * curvature) : 0.0;
            x[i] = x0 + step;
            largest_step = std::max(largest_step, std::fabs(step));
        }
        if (largest_step < tol) break;
    }
    return x;
}

inline double mean_objective(const RegressionDesign& d, std::span<const double> mu) {
    double s = 0.0;
    for (std::size_t t = 0; t < d.size(); ++t) {
        const auto y = d.regressor(t);
        double fitted = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) fitted += mu[i] * y[i];
        const double r = static_cast<double>(d.response(t)) - fitted;
        s += r * r;
    }
    return s / static_cast<double>(d.size());
}

inline double variance_objective(const RegressionDesign& d, std::span<const double> mu_hat,
                                 std::span<const double> theta) {
    double s = 0.0;
    for (std::size_t t = 0; t < d.size(); ++t) {
        const auto y = d.regressor(t);
        double fitted = 0.0, var = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            fitted += mu_hat[i] * y[i];
            var += theta[i] * y[i];
        }
        const double r = static_cast<double>(d.response(t)) - fitted;
        const double e = r * r - var;
        s += e * e;
    }
    return s / static_cast<double>(d.size());
}

inline std::vector<double> numeric_fit_mean(const RegressionDesign& d) {
    return minimize_quadratic([&](std::span<const double> mu) { return mean_objective(d, mu); },
                              std::vector<double>(d.width(), 0.0));
}

inline std::vector<double> numeric_fit_var(const RegressionDesign& d, std::span<const double> mu_hat) {
    std::vector<double> mu(mu_hat.begin(), mu_hat.end());
    return minimize_quadratic([&](std::span<const double> th) { return variance_objective(d, mu, th); },
                              std::vector<double>(d.width(), 0.0));
}

}  // namespace ginar::oracle
