#include "ginar/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ginar/errors.hpp"

namespace ginar {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows > Matrix::max_dimension || cols > Matrix::max_dimension) {
        throw std::length_error("matrix dimension exceeds " + std::to_string(Matrix::max_dimension));
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << "matrix " << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
            << b.cols();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    check_dims(rows, cols);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    check_dims(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double Matrix::max_abs() const noexcept {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::fabs(v));
    return best;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("matrix block out of range");
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) throw std::out_of_range("matrix block out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) (*this)(r0 + r, c0 + c) = src(r, c);
}

Matrix Matrix::principal(std::span<const std::size_t> indices) const {
    Matrix out(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
            if (indices[i] >= rows_ || indices[j] >= cols_) throw std::out_of_range("principal index out of range");
            out(i, j) = (*this)(indices[i], indices[j]);
        }
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "matrix *: inner dimension mismatch " << a.rows() << "x" << a.cols() << " * " << b.rows() << "x"
            << b.cols();
        throw std::invalid_argument(msg.str());
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector: dimension mismatch");
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "diff");
    double best = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) best = std::max(best, std::fabs(a.data()[i] - b.data()[i]));
    return best;
}

Matrix invert(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("invert: matrix is not square");
    const std::size_t n = m.rows();
    const double scale = m.max_abs();
    const double threshold = 1e-12 * scale;
    Matrix work = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(work(r, col)) > std::fabs(work(pivot, col))) pivot = r;
        const double pv = work(pivot, col);
        if (!(std::fabs(pv) >= threshold) || scale == 0.0) {
            std::ostringstream msg;
            msg << "singular matrix: pivot " << col << " has magnitude " << std::fabs(pv)
                << " below threshold " << threshold;
            throw SingularMatrixError(msg.str(), col);
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const double recip = 1.0 / pv;
        for (std::size_t c = 0; c < n; ++c) {
            work(col, c) *= recip;
            inv(col, c) *= recip;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = work(r, col);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                work(r, c) -= f * work(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

double inverse_quadratic_form(const Matrix& a, std::span<const double> x) {
    if (a.rows() != x.size()) throw std::invalid_argument("quadratic form: dimension mismatch");
    const Matrix inv = invert(a);
    const std::vector<double> y = inv * x;
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) q += x[i] * y[i];
    return q;
}

bool positive_definite(const Matrix& m) {
    if (!m.square()) return false;
    const std::size_t n = m.rows();
    Matrix work = m;
    for (std::size_t k = 0; k < n; ++k) {
        const double pivot = work(k, k);
        if (!(pivot > 0.0)) return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = work(r, k) / pivot;
            for (std::size_t c = k; c < n; ++c) work(r, c) -= f * work(k, c);
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& out, const Matrix& m) {
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ", ";
            out << m(r, c);
        }
    }
    return out << ']';
}

}  // namespace ginar
