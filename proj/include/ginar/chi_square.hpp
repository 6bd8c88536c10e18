#pragma once

namespace ginar {

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper tail 1 - F(x) of the chi-square law with df degrees of freedom.
/// Returns 1 for x <= 0.
double chi_square_survival(double x, int df);

/// The x with F(x) = prob, found by bisection to 1e-9 absolute.
/// Requires 0 < prob < 1.
double chi_square_quantile(double prob, int df);

}  // namespace ginar
