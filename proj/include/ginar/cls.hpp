#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ginar/matrix.hpp"
#include "ginar/simulate.hpp"

namespace ginar {

/// One regression row: Z_t paired with Y_{t-1} = (Z_{t-1}, ..., Z_{t-p}, 1).
struct RegressorRow {
    std::int64_t response;
    std::span<const double> regressor;
};

/// The n - p regression rows of a count series, stored contiguously.
class RegressionDesign {
public:
    RegressionDesign(std::size_t order, std::vector<std::int64_t> responses, std::vector<double> regressors);

    std::size_t order() const noexcept { return order_; }
    std::size_t width() const noexcept { return order_ + 1; }
    std::size_t size() const noexcept { return responses_.size(); }

    RegressorRow row(std::size_t i) const { return {responses_[i], regressor(i)}; }
    std::int64_t response(std::size_t i) const { return responses_[i]; }
    std::span<const double> regressor(std::size_t i) const {
        return std::span<const double>(regressors_).subspan(i * width(), width());
    }

private:
    std::size_t order_;
    std::vector<std::int64_t> responses_;
    std::vector<double> regressors_;
};

/// Rows for t = p+1..n. Throws InputError unless series.size() > p >= 1.
RegressionDesign build_regressors(std::span<const std::int64_t> series, std::size_t order);

/// mu_hat = (sum Y Y^T)^{-1} sum Z_t Y. Throws InputError with fewer than
/// p + 2 rows and SingularMatrixError on a singular Gram matrix.
std::vector<double> fit_mean(const RegressionDesign& design);

/// theta_hat = (sum Y Y^T)^{-1} sum r_t^2 Y with r_t = Z_t - mu_hat^T Y.
/// Components may be negative; see cls_warnings.
std::vector<double> fit_var(const RegressionDesign& design, std::span<const double> mu_hat);

/// Conditional least squares estimates, (mu_1..mu_p, mu_eps) and
/// (sigma_1^2..sigma_p^2, sigma_eps^2).
struct CLSFit {
    std::vector<double> mu_hat;
    std::vector<double> theta_hat;
    std::size_t n_eff = 0;
    std::vector<std::string> warnings;
};

/// Notes estimates outside the parameter space: mu_hat violating
/// stationarity or nonnegativity, and negative theta_hat components.
std::vector<std::string> cls_warnings(std::span<const double> mu_hat, std::span<const double> theta_hat);

CLSFit fit_cls(const RegressionDesign& design);

/// Plug-in moment matrices. Jm = Jv = mean Y Y^T; Im = mean (theta^T Y) Y Y^T;
/// Imv = mean r^3 Y Y^T; Iv = mean (r^4 - (theta^T Y)^2) Y Y^T, and the
/// assembled sandwich V of sqrt(n)(mu_hat - mu, theta_hat - theta).
struct MomentMatrices {
    Matrix Jm;
    Matrix Jv;
    Matrix Im;
    Matrix Imv;
    Matrix Iv;
    Matrix V;

    Matrix v11() const;
    Matrix v12() const;
    Matrix v21() const;
    Matrix v22() const;
};

/// divisor = 0 selects n_eff. V does not depend on the divisor.
MomentMatrices estimate_moment_matrices(const RegressionDesign& design, std::span<const double> mu_hat,
                                        std::span<const double> theta_hat, double divisor = 0.0);

/// V for conditional least squares, where the cross-Hessian block vanishes:
/// v11 = Jm^-1 Im Jm^-1, v12 = Jm^-1 Imv Jv^-1, v21 = v12^T, v22 = Jv^-1 Iv Jv^-1.
Matrix assemble_V_cls(const MomentMatrices& m);

/// Block formula for a two-stage M-estimator with cross-Hessian Jvm:
///   v11 = Jm^-1 Im Jm^-1
///   v12 = Jm^-1 (Imv - Im Jm^-1 Jvm^T) Jv^-1,  v21 = v12^T
///   v22 = Jv^-1 (Iv + Jvm Jm^-1 Im Jm^-1 Jvm^T - Imv^T Jm^-1 Jvm^T - Jvm Jm^-1 Imv) Jv^-1
Matrix assemble_V_general(const Matrix& Jm, const Matrix& Jv, const Matrix& Jvm, const Matrix& Im,
                          const Matrix& Imv, const Matrix& Iv);

}  // namespace ginar
