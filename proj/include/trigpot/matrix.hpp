#ifndef TRIGPOT_MATRIX_HPP
#define TRIGPOT_MATRIX_HPP

#include "trigpot/errors.hpp"
#include "trigpot/rational.hpp"
#include "trigpot/ring.hpp"

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace trigpot {

// Rectangular matrix over a field, row-major.
template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F{}) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; i++) m(i, i) = ring_one<F>();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw MathError("Matrix: dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; i++)
            for (size_t k = 0; k < a.cols_; k++) {
                if (ring_is_zero(a(i, k))) continue;
                for (size_t j = 0; j < b.cols_; j++) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("Matrix: dimension mismatch");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); i++) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw MathError("Matrix: vector dimension mismatch");
        std::vector<F> r(rows_, F{});
        for (size_t i = 0; i < rows_; i++)
            for (size_t j = 0; j < cols_; j++) r[i] += (*this)(i, j) * v[j];
        return r;
    }

  private:
    size_t rows_, cols_;
    std::vector<F> a_;
};

enum class SolveStatus { Ok, Inconsistent, Underdetermined };

template <class F>
struct SolveResult {
    SolveStatus status = SolveStatus::Ok;
    std::vector<F> solution;  // valid when status == Ok
};

// Exact linear solve A x = b by Gaussian elimination with explicit rank
// reporting; inconsistent and underdetermined systems are distinguished.
template <class F>
SolveResult<F> solve_linear_exact(Matrix<F> a, std::vector<F> b) {
    if (a.rows() != b.size()) throw MathError("solve_linear_exact: dimension mismatch");
    const size_t m = a.rows(), n = a.cols();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; col++) {
        size_t piv = row;
        while (piv < m && ring_is_zero(a(piv, col))) piv++;
        if (piv == m) continue;
        if (piv != row) {
            for (size_t j = 0; j < n; j++) std::swap(a(row, j), a(piv, j));
            std::swap(b[row], b[piv]);
        }
        const F inv = ring_one<F>() / a(row, col);
        for (size_t j = col; j < n; j++) a(row, j) = a(row, j) * inv;
        b[row] = b[row] * inv;
        for (size_t i = 0; i < m; i++) {
            if (i == row || ring_is_zero(a(i, col))) continue;
            const F f = a(i, col);
            for (size_t j = col; j < n; j++) a(i, j) = a(i, j) - f * a(row, j);
            b[i] = b[i] - f * b[row];
        }
        pivot_col.push_back(col);
        row++;
    }
    for (size_t i = row; i < m; i++)
        if (!ring_is_zero(b[i])) return {SolveStatus::Inconsistent, {}};
    if (pivot_col.size() < n) return {SolveStatus::Underdetermined, {}};
    std::vector<F> x(n, F{});
    for (size_t i = 0; i < n; i++) x[pivot_col[i]] = b[i];
    return {SolveStatus::Ok, std::move(x)};
}

// Determinant over a field (plain elimination; fine for the small matrices
// used here).
template <class F>
F determinant(Matrix<F> a) {
    if (a.rows() != a.cols()) throw MathError("determinant: not square");
    const size_t n = a.rows();
    F det = ring_one<F>();
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && ring_is_zero(a(piv, col))) piv++;
        if (piv == n) return F{};
        if (piv != col) {
            for (size_t j = 0; j < n; j++) std::swap(a(col, j), a(piv, j));
            det = -det;
        }
        det = det * a(col, col);
        const F inv = ring_one<F>() / a(col, col);
        for (size_t i = col + 1; i < n; i++) {
            if (ring_is_zero(a(i, col))) continue;
            const F f = a(i, col) * inv;
            for (size_t j = col; j < n; j++) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return det;
}

}  // namespace trigpot

#endif
