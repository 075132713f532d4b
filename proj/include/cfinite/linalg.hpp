#pragma once

// Exact dense linear algebra over a field F. F must provide + - * /, ==,
// and the hooks is_zero(x), zero_like(x), one_like(x). Pivoting is always
// leftmost column, first nonzero row, so results are deterministic.

#include "errors.hpp"
#include "quadratic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cfinite {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct RowEchelon {
    Matrix<F> rows;                      ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivot_cols; ///< pivot column of each kept row
    std::size_t cols = 0;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

namespace detail {

template <class F>
void check_shape(const Matrix<F>& m, std::size_t cols) {
    for (const auto& row : m) {
        if (row.size() != cols) {
            throw DimensionError("ragged matrix: row of width " + std::to_string(row.size()) + ", expected " +
                                 std::to_string(cols));
        }
    }
}

} // namespace detail

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
RowEchelon<F> row_reduce(Matrix<F> m, std::size_t cols) {
    detail::check_shape(m, cols);
    RowEchelon<F> out;
    out.cols = cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && is_zero(m[p][c])) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[rank], m[p]);
        const F inv = one_like(m[rank][c]) / m[rank][c];
        for (auto& x : m[rank]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || is_zero(m[r][c])) {
                continue;
            }
            const F factor = m[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[r][j] -= factor * m[rank][j];
            }
        }
        out.pivot_cols.push_back(c);
        ++rank;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

/// Indices of a maximal linearly independent subset of the rows, chosen
/// greedily in row order (a row is kept iff it is independent of the rows
/// kept before it).
template <class F>
std::vector<std::size_t> independent_rows(const Matrix<F>& m, std::size_t cols) {
    detail::check_shape(m, cols);
    // Echelon basis of the kept rows, each with its pivot column and a
    // normalized leading 1.
    Matrix<F> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < m.size(); ++r) {
        std::vector<F> v = m[r];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (is_zero(v[pivots[b]])) {
                continue;
            }
            const F factor = v[pivots[b]];
            for (std::size_t j = 0; j < cols; ++j) {
                v[j] -= factor * basis[b][j];
            }
        }
        std::size_t lead = 0;
        while (lead < cols && is_zero(v[lead])) {
            ++lead;
        }
        if (lead == cols) {
            continue;
        }
        const F inv = one_like(v[lead]) / v[lead];
        for (auto& x : v) {
            x *= inv;
        }
        // Keep earlier basis vectors reduced against the new pivot.
        for (auto& row : basis) {
            if (is_zero(row[lead])) {
                continue;
            }
            const F factor = row[lead];
            for (std::size_t j = 0; j < cols; ++j) {
                row[j] -= factor * v[j];
            }
        }
        basis.push_back(std::move(v));
        pivots.push_back(lead);
        kept.push_back(r);
    }
    return kept;
}

/// A nonzero x with m * x = 0 for an m x cols matrix with m < cols.
///
/// The returned vector is the basis vector of the leftmost free column f:
/// x_f = 1, free columns other than f are 0, so its last nonzero entry is at
/// the smallest possible position. `zero` fixes the field when m has no rows.
template <class F>
std::vector<F> kernel_nontrivial(const Matrix<F>& m, std::size_t cols, const F& zero) {
    if (m.size() >= cols) {
        throw DimensionError("kernel_nontrivial needs fewer rows than columns (" + std::to_string(m.size()) +
                             " x " + std::to_string(cols) + ")");
    }
    const RowEchelon<F> e = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::size_t free_col = 0;
    while (is_pivot[free_col]) {
        ++free_col;
    }
    std::vector<F> x(cols, zero);
    x[free_col] = one_like(zero);
    for (std::size_t r = 0; r < e.rank(); ++r) {
        x[e.pivot_cols[r]] = -e.rows[r][free_col];
    }
    return x;
}

/// Determinant by elimination over F. Square input required.
template <class F>
F determinant(Matrix<F> m) {
    const std::size_t n = m.size();
    detail::check_shape(m, n);
    if (n == 0) {
        throw DimensionError("determinant of an empty matrix");
    }
    F det = one_like(m[0][0]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m[p][c])) {
            ++p;
        }
        if (p == n) {
            return zero_like(m[0][0]);
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const F inv = one_like(m[c][c]) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c])) {
                continue;
            }
            const F factor = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) {
                m[r][j] -= factor * m[c][j];
            }
        }
    }
    return det;
}

/// Some solution of m * x = rhs, or empty when the system is inconsistent.
/// Free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve_any(const Matrix<F>& m, const std::vector<F>& rhs, std::size_t cols,
                                        const F& zero) {
    if (m.size() != rhs.size()) {
        throw DimensionError("right-hand side length does not match row count");
    }
    Matrix<F> aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) {
        aug[r].push_back(rhs[r]);
    }
    const RowEchelon<F> e = row_reduce(std::move(aug), cols + 1);
    std::vector<F> x(cols, zero);
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (e.pivot_cols[r] == cols) {
            return std::nullopt;
        }
        x[e.pivot_cols[r]] = e.rows[r][cols];
    }
    return x;
}

} // namespace cfinite
