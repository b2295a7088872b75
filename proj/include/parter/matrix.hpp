#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parter/errors.hpp"
#include "parter/index_set.hpp"
#include "parter/rational.hpp"

namespace parter {

/// Dense rectangular matrix of exact rationals. Element access is 0-based;
/// vertex labels in IndexSet arguments are 1-based throughout the library.
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw InvalidArgumentError("Matrix: negative dimension");
        a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw InvalidArgumentError("Matrix: ragged row lengths");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    Rational& operator()(int r, int c) {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const Rational& at(int r, int c) const {
        check(r, c);
        return (*this)(r, c);
    }
    Rational& at(int r, int c) {
        check(r, c);
        return (*this)(r, c);
    }

    std::span<const Rational> row(int r) const {
        return {a_.data() + static_cast<std::size_t>(r) * cols_,
                static_cast<std::size_t>(cols_)};
    }

    void swap_rows(int r1, int r2) {
        for (int j = 0; j < cols_; ++j)
            std::swap((*this)(r1, j), (*this)(r2, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw BoundsError("Matrix multiply: shape mismatch " +
                              std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                              " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        Matrix p(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }

    /// Deterministic content digest over shape and exact values.
    std::uint64_t fingerprint() const {
        auto mix = [](std::uint64_t h, std::uint64_t v) {
            h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            return h;
        };
        std::uint64_t h = mix(0x243F6A8885A308D3ULL, static_cast<std::uint64_t>(rows_));
        h = mix(h, static_cast<std::uint64_t>(cols_));
        for (const auto& v : a_) h = mix(h, v.digest());
        return h;
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw BoundsError("Matrix: (" + std::to_string(r) + "," + std::to_string(c) +
                              ") outside " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Stacks `top` above `bottom` (equal column counts required).
inline Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols())
        throw BoundsError("stack_rows: column counts differ");
    Matrix s(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) s(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) s(top.rows() + i, j) = bottom(i, j);
    return s;
}

/// Dense n×n symmetric matrix of exact rationals, the object the whole
/// library is about. Symmetry is enforced at construction; the 0×0 matrix
/// is a valid value.
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(int n) : n_(n) {
        if (n < 0) throw InvalidArgumentError("SymMatrix: negative order");
        a_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    }

    /// Construction from a full grid; asymmetric data is an error.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        return from_matrix(Matrix::from_rows(rows));
    }

    static SymMatrix from_matrix(const Matrix& m) {
        if (!m.is_square())
            throw InvalidArgumentError("SymMatrix: not square (" +
                                       std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + ")");
        for (int i = 0; i < m.rows(); ++i)
            for (int j = i + 1; j < m.cols(); ++j)
                if (m(i, j) != m(j, i))
                    throw InvalidArgumentError(
                        "SymMatrix: entries (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") and (" + std::to_string(j + 1) + "," +
                        std::to_string(i + 1) + ") differ");
        SymMatrix s(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) s.a_[idx(s.n_, i, j)] = m(i, j);
        return s;
    }

    static SymMatrix identity(int n) {
        SymMatrix s(n);
        for (int i = 0; i < n; ++i) s.a_[idx(n, i, i)] = Rational(1);
        return s;
    }

    static SymMatrix zero(int n) { return SymMatrix(n); }

    int order() const { return n_; }

    const Rational& operator()(int i, int j) const { return a_[idx(n_, i, j)]; }

    const Rational& at(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw BoundsError("SymMatrix: (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside order " + std::to_string(n_));
        return (*this)(i, j);
    }

    /// Writes both (i,j) and (j,i); the only mutation path, so symmetry
    /// cannot be broken after construction.
    void set(int i, int j, Rational v) {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw BoundsError("SymMatrix::set out of range");
        a_[idx(n_, i, j)] = v;
        a_[idx(n_, j, i)] = std::move(v);
    }

    Matrix to_matrix() const {
        Matrix m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }

    std::uint64_t fingerprint() const { return to_matrix().fingerprint(); }

private:
    static std::size_t idx(int n, int i, int j) {
        return static_cast<std::size_t>(i) * n + j;
    }

    int n_ = 0;
    std::vector<Rational> a_;
};

/// A[rows, cols]: keep the rows and columns named by the 1-based index sets.
inline Matrix submatrix_keep(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (!rows.empty() && rows.values().back() > m.rows())
        throw BoundsError("submatrix_keep: row index out of range");
    if (!cols.empty() && cols.values().back() > m.cols())
        throw BoundsError("submatrix_keep: column index out of range");
    Matrix s(rows.size(), cols.size());
    for (int i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols.size(); ++j)
            s(i, j) = m(rows[i] - 1, cols[j] - 1);
    return s;
}

inline Matrix submatrix_keep(const SymMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    rows.check_bounds(a.order());
    cols.check_bounds(a.order());
    Matrix s(rows.size(), cols.size());
    for (int i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols.size(); ++j)
            s(i, j) = a(rows[i] - 1, cols[j] - 1);
    return s;
}

/// A[α]: principal submatrix on α (symmetric).
inline SymMatrix principal_submatrix(const SymMatrix& a, const IndexSet& alpha) {
    alpha.check_bounds(a.order());
    SymMatrix s(alpha.size());
    for (int i = 0; i < alpha.size(); ++i)
        for (int j = i; j < alpha.size(); ++j)
            s.set(i, j, a(alpha[i] - 1, alpha[j] - 1));
    return s;
}

/// A(α): delete the rows and columns named by α. A(∅) = A.
inline SymMatrix submatrix_delete(const SymMatrix& a, const IndexSet& alpha) {
    alpha.check_bounds(a.order());
    return principal_submatrix(a, alpha.complement(a.order()));
}

} // namespace parter
