#ifndef BRIESKORN_MATRIX_HPP
#define BRIESKORN_MATRIX_HPP

#include "brieskorn/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace brieskorn {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const;
    Matrix transposed() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(Matrix m);
Rational determinant(Matrix m);
Matrix power(const Matrix& m, unsigned exponent);

/// Reduced row echelon form of a set of row vectors, used to reduce
/// arbitrary vectors modulo their span.
class ReducedSpan {
public:
    ReducedSpan() = default;
    /// `rows` are vectors of length `width`; they need not be independent.
    ReducedSpan(std::size_t width, std::vector<std::vector<Rational>> rows);

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Fully reduced basis rows, row i normalized to 1 at pivots()[i].
    const std::vector<std::vector<Rational>>& rows() const noexcept { return basis_; }

    /// Columns carrying no pivot, ascending. They index a complement basis.
    std::vector<std::size_t> free_columns() const;

    /// Returns the unique representative of v + span with zero pivot entries.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    std::size_t width_ = 0;
    std::vector<std::vector<Rational>> basis_;
    std::vector<std::size_t> pivots_;
};

/// Generator of ker(a) when the kernel is exactly one dimensional,
/// otherwise an empty vector.
std::vector<Rational> kernel_line(const Matrix& a);

}  // namespace brieskorn

#endif
