#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dynkin {

/// Dense row-major matrix over an exact field `F`.
///
/// `F` must be constructible from `int`, support the four field operations and
/// `operator==`. All algorithms below are exact Gaussian elimination; there is
/// no pivoting strategy beyond "first nonzero", since there is no rounding.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == F(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const F& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduces `m` to reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == F(0)) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const F inv = F(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == F(0)) continue;
            const F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of the right null space {x : m x = 0}, one column vector per entry.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Matrix whose columns form a basis of the column space of `m`.
template <class F>
Matrix<F> column_space(const Matrix<F>& m) {
    Matrix<F> t = m;
    const auto pivots = rref(t);
    Matrix<F> out(m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
    return out;
}

/// Matrix whose columns form a basis of ker(m).
template <class F>
Matrix<F> kernel_matrix(const Matrix<F>& m) {
    const auto basis = nullspace(m);
    Matrix<F> out(m.cols(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t r = 0; r < m.cols(); ++r) out(r, k) = basis[k][r];
    return out;
}

/// Solves `basis * x = target` column by column, where `basis` has full column
/// rank and every column of `target` lies in its span. Throws otherwise.
template <class F>
Matrix<F> solve_in_span(const Matrix<F>& basis, const Matrix<F>& target) {
    if (basis.rows() != target.rows()) throw std::invalid_argument("solve_in_span: shape mismatch");
    const std::size_t k = basis.cols();
    Matrix<F> aug(basis.rows(), k + target.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < k; ++c) aug(r, c) = basis(r, c);
        for (std::size_t c = 0; c < target.cols(); ++c) aug(r, k + c) = target(r, c);
    }
    const auto pivots = rref(aug);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= k) throw std::runtime_error("solve_in_span: target not in span");
        if (pivots[i] != i) throw std::runtime_error("solve_in_span: basis not of full column rank");
    }
    if (pivots.size() != k) throw std::runtime_error("solve_in_span: basis not of full column rank");
    Matrix<F> x(k, target.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < target.cols(); ++c) x(r, c) = aug(r, k + c);
    return x;
}

/// Rows spanning the left null space {y : y m = 0}, stacked as a matrix.
template <class F>
Matrix<F> cokernel_projection(const Matrix<F>& m) {
    const auto basis = nullspace(m.transpose());
    Matrix<F> out(basis.size(), m.rows());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t c = 0; c < m.rows(); ++c) out(k, c) = basis[k][c];
    return out;
}

}  // namespace dynkin
