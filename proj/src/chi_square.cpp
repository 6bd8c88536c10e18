#include "ginar/chi_square.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ginar {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

// Series representation, converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz evaluation of the continued fraction for Q, x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("incomplete gamma: shape must be positive");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("incomplete gamma: shape must be positive");
    if (x <= 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_continued_fraction(a, x);
}

double chi_square_survival(double x, int df) {
    if (df < 1) throw std::domain_error("chi-square: df must be positive");
    if (std::isinf(x) && x > 0) return 0.0;
    const double q = regularized_gamma_q(0.5 * df, 0.5 * x);
    return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
}

double chi_square_quantile(double prob, int df) {
    if (!(prob > 0.0 && prob < 1.0)) throw std::domain_error("chi-square quantile: prob must lie in (0, 1)");
    if (df < 1) throw std::domain_error("chi-square: df must be positive");
    const double tail = 1.0 - prob;
    double lo = 0.0;
    double hi = static_cast<double>(df) + 10.0;
    while (chi_square_survival(hi, df) > tail) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (chi_square_survival(mid, df) > tail) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ginar
