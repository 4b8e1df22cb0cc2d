#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pvkit/error.hpp"

namespace pvkit {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
void require_square(const Matrix<T> &m, const char *what) {
    if (m.empty()) throw error(errc::shape_error, std::string(what) + ": empty matrix");
    for (const auto &row : m)
        if (row.size() != m.size()) throw error(errc::shape_error, std::string(what) + ": matrix is not square");
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so this
/// works over any field or integral domain with exact division.
template <class T>
T bareiss_determinant(Matrix<T> a) {
    require_square(a, "determinant");
    const std::size_t n = a.size();
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == T(0)) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == T(0)) ++p;
            if (p == n) return T(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Laplace expansion along the first row. Only ring operations are used, so it
/// applies to differential polynomials and truncated series.
template <class T>
T expansion_determinant(const Matrix<T> &a) {
    require_square(a, "determinant");
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    T acc = a[0][0] - a[0][0];
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<T> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[r][j]);
            minor.push_back(std::move(row));
        }
        T term = a[0][c] * expansion_determinant(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Submatrix with row r and column c removed.
template <class T>
Matrix<T> minor_matrix(const Matrix<T> &a, std::size_t r, std::size_t c) {
    Matrix<T> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r) continue;
        std::vector<T> row;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (j != c) row.push_back(a[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
    Matrix<T> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw error(errc::shape_error, "matrix product shape mismatch");
    Matrix<T> c(a.size(), std::vector<T>(b[0].size(), T(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

/// Inverse over a field via Gauss-Jordan; nullopt-like failure signalled by an empty result.
template <class T>
Matrix<T> inverse_or_empty(Matrix<T> a) {
    require_square(a, "inverse");
    const std::size_t n = a.size();
    Matrix<T> inv = identity_matrix<T>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == T(0)) ++p;
        if (p == n) return {};
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        const T piv = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / piv;
            inv[col][j] = inv[col][j] / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == T(0)) continue;
            const T f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Basis of the right kernel over a field, from the reduced row echelon form.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> a, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == T(0)) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const T piv = a[row][col];
        for (std::size_t j = 0; j < cols; ++j) a[row][j] = a[row][j] / piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == T(0)) continue;
            const T f = a[i][col];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(cols, T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pvkit
