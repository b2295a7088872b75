#pragma once

#include <cstdlib>
#include <vector>

#include "parter/errors.hpp"
#include "parter/matrix.hpp"
#include "parter/rational.hpp"

namespace parter {

namespace detail {

struct Echelon {
    Matrix m;               // row echelon form (not reduced)
    std::vector<int> pivot_cols; // 0-based pivot column per pivot row
};

/// Fraction-based Gaussian elimination. The pivot in each column is the
/// first row with a nonzero entry (no magnitude-based pivot selection);
/// exact arithmetic makes the result independent of growth concerns and
/// the fixed rule keeps every run byte-identical.
inline Echelon echelonize(Matrix m) {
    Echelon e;
    e.pivot_cols.reserve(static_cast<std::size_t>(std::min(m.rows(), m.cols())));
    int pr = 0;
    for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
        int sel = -1;
        for (int r = pr; r < m.rows(); ++r) {
            if (!m(r, c).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pr) m.swap_rows(sel, pr);
        for (int r = pr + 1; r < m.rows(); ++r) {
            if (m(r, c).is_zero()) continue;
            Rational f = m(r, c) / m(pr, c);
            m(r, c) = Rational(0);
            for (int j = c + 1; j < m.cols(); ++j)
                m(r, j) -= f * m(pr, j);
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.m = std::move(m);
    return e;
}

/// Reduced row echelon form: unit pivots, zeros above and below each pivot.
inline Echelon rref(Matrix m) {
    Echelon e = echelonize(std::move(m));
    Matrix& r = e.m;
    for (int p = static_cast<int>(e.pivot_cols.size()) - 1; p >= 0; --p) {
        const int c = e.pivot_cols[static_cast<std::size_t>(p)];
        Rational inv = Rational(1) / r(p, c);
        for (int j = c; j < r.cols(); ++j) r(p, j) *= inv;
        for (int above = 0; above < p; ++above) {
            if (r(above, c).is_zero()) continue;
            Rational f = r(above, c);
            for (int j = c; j < r.cols(); ++j)
                r(above, j) -= f * r(p, j);
        }
    }
    return e;
}

inline bool mutate_rank_enabled() {
#ifdef PARTER_MUTATE_RANK
    return true;
#else
    static const bool on = [] {
        const char* v = std::getenv("PARTER_MUTATE_RANK");
        return v != nullptr && v[0] != '\0' && v[0] != '0';
    }();
    return on;
#endif
}

} // namespace detail

inline int rank(const Matrix& m) {
    int r = static_cast<int>(detail::echelonize(m).pivot_cols.size());
    if (detail::mutate_rank_enabled()) {
        // Deliberate fault injection for self-test falsification runs:
        // perturbs rank on a content-dependent half of all inputs.
        if (m.fingerprint() & 1ULL) r += 1;
    }
    return r;
}

inline int rank(const SymMatrix& a) { return rank(a.to_matrix()); }

/// Nullity of a square matrix: order minus rank. The 0×0 matrix has nullity 0.
inline int nullity(const Matrix& m) {
    if (!m.is_square())
        throw InvalidArgumentError("nullity: matrix not square");
    return m.cols() - rank(m);
}

inline int nullity(const SymMatrix& a) { return a.order() - rank(a); }

/// Exact determinant via triangularization. det of the 0×0 matrix is 1.
inline Rational det(const Matrix& m) {
    if (!m.is_square())
        throw InvalidArgumentError("det: matrix not square");
    Matrix w = m;
    Rational d(1);
    for (int c = 0; c < w.cols(); ++c) {
        int sel = -1;
        for (int r = c; r < w.rows(); ++r) {
            if (!w(r, c).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) return Rational(0);
        if (sel != c) {
            w.swap_rows(sel, c);
            d = -d;
        }
        d *= w(c, c);
        for (int r = c + 1; r < w.rows(); ++r) {
            if (w(r, c).is_zero()) continue;
            Rational f = w(r, c) / w(c, c);
            for (int j = c; j < w.cols(); ++j)
                w(r, j) -= f * w(c, j);
        }
    }
    return d;
}

inline Rational det(const SymMatrix& a) { return det(a.to_matrix()); }

/// Exact inverse by Gauss-Jordan on [M | I]. Throws SingularMatrixError
/// when no inverse exists. inverse of the 0×0 matrix is the 0×0 matrix.
inline Matrix inverse(const Matrix& m) {
    if (!m.is_square())
        throw InvalidArgumentError("inverse: matrix not square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    detail::Echelon e = detail::rref(std::move(aug));
    if (static_cast<int>(e.pivot_cols.size()) < n || (n > 0 && e.pivot_cols[n - 1] >= n))
        throw SingularMatrixError("inverse: matrix of order " + std::to_string(n) +
                                  " is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
    return inv;
}

inline SymMatrix inverse(const SymMatrix& a) {
    return SymMatrix::from_matrix(inverse(a.to_matrix()));
}

/// Basis of the right nullspace {x : Mx = 0}, one column vector per basis
/// element, in free-column order. Empty vector when the kernel is trivial.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    detail::Echelon e = detail::rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t p = 0; p < e.pivot_cols.size(); ++p)
            v[static_cast<std::size_t>(e.pivot_cols[p])] =
                -e.m(static_cast<int>(p), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Whether `v` lies in the row space of `m`. Decided by eliminating v
/// against an echelon form of m; membership iff the residual vanishes.
inline bool row_in_span(const Matrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw InvalidArgumentError("row_in_span: vector length " +
                                   std::to_string(v.size()) + " != column count " +
                                   std::to_string(m.cols()));
    detail::Echelon e = detail::echelonize(m);
    std::vector<Rational> w = v;
    for (std::size_t p = 0; p < e.pivot_cols.size(); ++p) {
        const int c = e.pivot_cols[p];
        if (w[static_cast<std::size_t>(c)].is_zero()) continue;
        Rational f = w[static_cast<std::size_t>(c)] / e.m(static_cast<int>(p), c);
        for (int j = c; j < e.m.cols(); ++j)
            w[static_cast<std::size_t>(j)] -= f * e.m(static_cast<int>(p), j);
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

/// Whether row r0 (0-based) of `m` is a linear combination of the others.
inline bool dependent_on_others(const Matrix& m, int r0) {
    if (r0 < 0 || r0 >= m.rows())
        throw BoundsError("dependent_on_others: row " + std::to_string(r0) +
                          " outside " + std::to_string(m.rows()) + " rows");
    Matrix rest(m.rows() - 1, m.cols());
    int k = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == r0) continue;
        for (int j = 0; j < m.cols(); ++j) rest(k, j) = m(i, j);
        ++k;
    }
    std::vector<Rational> v(m.row(r0).begin(), m.row(r0).end());
    return row_in_span(rest, v);
}

} // namespace parter
