#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace ginar {

/// Dense row-major matrix. Everything here is at most 2(p+1) square, so no
/// blocking or expression templates.
class Matrix {
public:
    static constexpr std::size_t max_dimension = 64;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    /// Row-wise literal, e.g. Matrix{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> data() const noexcept { return data_; }

    Matrix transpose() const;
    double max_abs() const noexcept;

    /// Copy of the block starting at (r0, c0).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

    /// Principal submatrix over the given 0-based indices.
    Matrix principal(std::span<const std::size_t> indices) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Gauss–Jordan with partial pivoting. Throws SingularMatrixError when a
/// pivot magnitude drops below 1e-12 times the largest absolute entry.
Matrix invert(const Matrix& m);

/// x^T A^{-1} x.
double inverse_quadratic_form(const Matrix& a, std::span<const double> x);

/// True when symmetric elimination without pivoting keeps every pivot
/// strictly positive (equivalently, a Cholesky factor exists).
bool positive_definite(const Matrix& m);

std::ostream& operator<<(std::ostream& out, const Matrix& m);

}  // namespace ginar
