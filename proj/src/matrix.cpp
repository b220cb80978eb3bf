#include "brieskorn/matrix.hpp"

#include "brieskorn/error.hpp"

#include <utility>

namespace brieskorn {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        fail(ErrorCode::ShapeMismatch, "matrix product of incompatible shapes");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

namespace {

// In-place forward elimination; returns the pivot columns. When `sign` is
// non-null it tracks the parity of row swaps.
std::vector<std::size_t> eliminate(Matrix& m, int* sign) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
            if (sign) *sign = -*sign;
        }
        const Rational pivot = m(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            const Rational factor = m(r, col) / pivot;
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr).size(); }

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
    int sign = 1;
    auto pivots = eliminate(m, &sign);
    if (pivots.size() < m.rows()) return 0;
    Rational det = sign;
    for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
    return det;
}

Matrix power(const Matrix& m, unsigned exponent) {
    if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "power of a non-square matrix");
    Matrix result = Matrix::identity(m.rows());
    for (unsigned i = 0; i < exponent; ++i) result = result * m;
    return result;
}

ReducedSpan::ReducedSpan(std::size_t width, std::vector<std::vector<Rational>> rows) : width_(width) {
    // Gauss-Jordan, one incoming vector at a time against the current basis.
    for (auto& v : rows) {
        if (v.size() != width_) fail(ErrorCode::ShapeMismatch, "span vector of wrong width");
        v = reduce(std::move(v));
        std::size_t lead = 0;
        while (lead < width_ && v[lead] == 0) ++lead;
        if (lead == width_) continue;

        const Rational inv = 1 / v[lead];
        for (auto& x : v) x *= inv;
        for (auto& b : basis_) {
            if (b[lead] == 0) continue;
            const Rational factor = b[lead];
            for (std::size_t c = 0; c < width_; ++c) b[c] -= factor * v[c];
        }
        // Keep pivots sorted so reduce() and free_columns() see echelon order.
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    }
}

std::vector<std::size_t> ReducedSpan::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < width_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<Rational> ReducedSpan::reduce(std::vector<Rational> v) const {
    if (v.size() != width_) fail(ErrorCode::ShapeMismatch, "reduced vector of wrong width");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        const Rational factor = v[p];
        const auto& b = basis_[i];
        for (std::size_t c = 0; c < width_; ++c) {
            if (b[c] != 0) v[c] -= factor * b[c];
        }
    }
    return v;
}

std::vector<Rational> kernel_line(const Matrix& a) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.emplace_back(a.row(r).begin(), a.row(r).end());
    ReducedSpan span(a.cols(), std::move(rows));
    const auto free = span.free_columns();
    if (free.size() != 1) return {};

    // Basis rows are fully reduced, so x_f = 1 and x_pivot = -row[f].
    const std::size_t f = free.front();
    std::vector<Rational> x(a.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < span.rank(); ++i) x[span.pivots()[i]] = -span.rows()[i][f];
    return x;
}

}  // namespace brieskorn
