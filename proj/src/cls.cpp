#include "ginar/cls.hpp"

#include <cmath>
#include <sstream>

#include "ginar/errors.hpp"

namespace ginar {

RegressionDesign::RegressionDesign(std::size_t order, std::vector<std::int64_t> responses,
                                   std::vector<double> regressors)
    : order_(order), responses_(std::move(responses)), regressors_(std::move(regressors)) {
    if (regressors_.size() != responses_.size() * width()) {
        throw std::invalid_argument("regression design: regressor storage does not match row count");
    }
}

RegressionDesign build_regressors(std::span<const std::int64_t> series, std::size_t order) {
    if (order < 1) throw InputError("model order must be at least 1");
    if (series.size() <= order) {
        std::ostringstream msg;
        msg << "series of length " << series.size() << " is too short for order " << order;
        throw InputError(msg.str());
    }
    const std::size_t rows = series.size() - order;
    std::vector<std::int64_t> responses;
    std::vector<double> regressors;
    responses.reserve(rows);
    regressors.reserve(rows * (order + 1));
    for (std::size_t t = order; t < series.size(); ++t) {
        responses.push_back(series[t]);
        for (std::size_t i = 1; i <= order; ++i) regressors.push_back(static_cast<double>(series[t - i]));
        regressors.push_back(1.0);
    }
    return RegressionDesign(order, std::move(responses), std::move(regressors));
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Accumulates weight * Y Y^T into acc (upper triangle; mirrored by finish).
void add_outer(Matrix& acc, std::span<const double> y, double weight) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double wi = weight * y[i];
        for (std::size_t j = i; j < y.size(); ++j) acc(i, j) += wi * y[j];
    }
}

void finish_symmetric(Matrix& acc, double divisor) {
    for (std::size_t i = 0; i < acc.rows(); ++i)
        for (std::size_t j = i; j < acc.cols(); ++j) {
            acc(i, j) /= divisor;
            acc(j, i) = acc(i, j);
        }
}

void require_rows(const RegressionDesign& design) {
    if (design.size() < design.order() + 2) {
        std::ostringstream msg;
        msg << "conditional least squares needs at least " << design.order() + 2 << " regression rows, got "
            << design.size();
        throw InputError(msg.str());
    }
}

Matrix gram(const RegressionDesign& design) {
    Matrix g(design.width(), design.width());
    for (std::size_t t = 0; t < design.size(); ++t) add_outer(g, design.regressor(t), 1.0);
    finish_symmetric(g, static_cast<double>(design.size()));
    return g;
}

Matrix invert_gram(const Matrix& g) {
    try {
        return invert(g);
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError(
            std::string("Gram matrix sum Y Y^T is singular; lagged regressors are collinear with each other or "
                        "with the intercept (e.g. a constant series): ") +
                e.what(),
            e.pivot());
    }
}

// (mean Y Y^T)^{-1} * mean(response_t * Y).
template <class Response>
std::vector<double> solve_normal(const RegressionDesign& design, const Matrix& gram_inv, Response response) {
    std::vector<double> rhs(design.width(), 0.0);
    for (std::size_t t = 0; t < design.size(); ++t) {
        const double z = response(t);
        const auto y = design.regressor(t);
        for (std::size_t i = 0; i < y.size(); ++i) rhs[i] += z * y[i];
    }
    for (double& v : rhs) v /= static_cast<double>(design.size());
    return gram_inv * std::span<const double>(rhs);
}

std::vector<double> mean_from(const RegressionDesign& design, const Matrix& gram_inv) {
    return solve_normal(design, gram_inv, [&](std::size_t t) { return static_cast<double>(design.response(t)); });
}

std::vector<double> var_from(const RegressionDesign& design, const Matrix& gram_inv, std::span<const double> mu_hat) {
    return solve_normal(design, gram_inv, [&](std::size_t t) {
        const double r = static_cast<double>(design.response(t)) - dot(mu_hat, design.regressor(t));
        return r * r;
    });
}

}  // namespace

std::vector<double> fit_mean(const RegressionDesign& design) {
    require_rows(design);
    return mean_from(design, invert_gram(gram(design)));
}

std::vector<double> fit_var(const RegressionDesign& design, std::span<const double> mu_hat) {
    require_rows(design);
    if (mu_hat.size() != design.width()) throw std::invalid_argument("fit_var: mu_hat has wrong length");
    return var_from(design, invert_gram(gram(design)), mu_hat);
}

std::vector<std::string> cls_warnings(std::span<const double> mu_hat, std::span<const double> theta_hat) {
    std::vector<std::string> out;
    const std::size_t p = mu_hat.size() - 1;
    double sum = 0.0;
    bool negative = false;
    for (std::size_t i = 0; i < p; ++i) {
        sum += mu_hat[i];
        negative = negative || mu_hat[i] < 0.0;
    }
    if (negative || sum >= 1.0) {
        std::ostringstream msg;
        msg << "mu_hat thinning means fall outside the stationarity region (sum " << sum
            << (negative ? ", negative component" : "") << ")";
        out.push_back(msg.str());
    }
    if (mu_hat[p] < 0.0) out.push_back("mu_hat innovation mean is negative");
    for (std::size_t i = 0; i < theta_hat.size(); ++i) {
        if (theta_hat[i] < 0.0) {
            std::ostringstream msg;
            msg << "theta_hat[" << i + 1 << "] = " << theta_hat[i] << " is negative";
            out.push_back(msg.str());
        }
    }
    return out;
}

CLSFit fit_cls(const RegressionDesign& design) {
    require_rows(design);
    const Matrix gram_inv = invert_gram(gram(design));
    CLSFit fit;
    fit.mu_hat = mean_from(design, gram_inv);
    fit.theta_hat = var_from(design, gram_inv, fit.mu_hat);
    fit.n_eff = design.size();
    fit.warnings = cls_warnings(fit.mu_hat, fit.theta_hat);
    return fit;
}

Matrix MomentMatrices::v11() const {
    const std::size_t k = Jm.rows();
    return V.block(0, 0, k, k);
}
Matrix MomentMatrices::v12() const {
    const std::size_t k = Jm.rows();
    return V.block(0, k, k, k);
}
Matrix MomentMatrices::v21() const {
    const std::size_t k = Jm.rows();
    return V.block(k, 0, k, k);
}
Matrix MomentMatrices::v22() const {
    const std::size_t k = Jm.rows();
    return V.block(k, k, k, k);
}

MomentMatrices estimate_moment_matrices(const RegressionDesign& design, std::span<const double> mu_hat,
                                        std::span<const double> theta_hat, double divisor) {
    if (design.size() == 0) throw InputError("moment matrices need at least one regression row");
    const std::size_t k = design.width();
    if (mu_hat.size() != k || theta_hat.size() != k) {
        throw std::invalid_argument("moment matrices: parameter vectors have wrong length");
    }
    if (divisor == 0.0) divisor = static_cast<double>(design.size());

    MomentMatrices m{Matrix(k, k), Matrix(k, k), Matrix(k, k), Matrix(k, k), Matrix(k, k), Matrix()};
    for (std::size_t t = 0; t < design.size(); ++t) {
        const auto y = design.regressor(t);
        const double r = static_cast<double>(design.response(t)) - dot(mu_hat, y);
        const double v = dot(theta_hat, y);
        const double r2 = r * r;
        add_outer(m.Jm, y, 1.0);
        add_outer(m.Im, y, v);
        add_outer(m.Imv, y, r2 * r);
        add_outer(m.Iv, y, r2 * r2 - v * v);
    }
    finish_symmetric(m.Jm, divisor);
    finish_symmetric(m.Im, divisor);
    finish_symmetric(m.Imv, divisor);
    finish_symmetric(m.Iv, divisor);
    m.Jv = m.Jm;
    m.V = assemble_V_cls(m);
    return m;
}

namespace {

Matrix assemble_blocks(const Matrix& v11, const Matrix& v12, const Matrix& v22) {
    const std::size_t k = v11.rows();
    Matrix V(2 * k, 2 * k);
    V.set_block(0, 0, v11);
    V.set_block(0, k, v12);
    V.set_block(k, 0, v12.transpose());
    V.set_block(k, k, v22);
    return V;
}

void require_square_same(const Matrix& a, const Matrix& ref, const char* name) {
    if (!a.square() || a.rows() != ref.rows()) {
        throw std::invalid_argument(std::string("covariance assembly: ") + name + " has wrong shape");
    }
}

}  // namespace

Matrix assemble_V_cls(const MomentMatrices& m) {
    for (const auto* mat : {&m.Jv, &m.Im, &m.Imv, &m.Iv}) require_square_same(*mat, m.Jm, "moment matrix");
    const Matrix jm_inv = invert_gram(m.Jm);
    const Matrix jv_inv = invert_gram(m.Jv);
    return assemble_blocks(jm_inv * m.Im * jm_inv, jm_inv * m.Imv * jv_inv, jv_inv * m.Iv * jv_inv);
}

Matrix assemble_V_general(const Matrix& Jm, const Matrix& Jv, const Matrix& Jvm, const Matrix& Im,
                          const Matrix& Imv, const Matrix& Iv) {
    require_square_same(Jm, Jm, "Jm");
    require_square_same(Jv, Jm, "Jv");
    require_square_same(Jvm, Jm, "Jvm");
    require_square_same(Im, Jm, "Im");
    require_square_same(Imv, Jm, "Imv");
    require_square_same(Iv, Jm, "Iv");
    const Matrix jm_inv = invert(Jm);
    const Matrix jv_inv = invert(Jv);
    const Matrix jvm_t = Jvm.transpose();
    const Matrix v11 = jm_inv * Im * jm_inv;
    const Matrix v12 = jm_inv * (Imv - Im * jm_inv * jvm_t) * jv_inv;
    const Matrix inner = Iv + Jvm * jm_inv * Im * jm_inv * jvm_t - Imv.transpose() * jm_inv * jvm_t -
                         Jvm * jm_inv * Imv;
    const Matrix v22 = jv_inv * inner * jv_inv;
    return assemble_blocks(v11, v12, v22);
}

}  // namespace ginar
