#pragma once

// Dense exact linear algebra over a field: products, reduced row echelon
// form, rank, kernel and inverse.

#include "gradedk/exact/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gradedk {

template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

template <class F>
DenseMatrix<F> dense_filled(std::size_t rows, std::size_t cols, const F& value) {
    return DenseMatrix<F>(rows, std::vector<F>(cols, value));
}

template <class F>
DenseMatrix<F> dense_identity(std::size_t n, const F& proto) {
    auto m = dense_filled(n, n, zero_like(proto));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = one_like(proto);
    return m;
}

template <class F>
DenseMatrix<F> dense_multiply(const DenseMatrix<F>& a, const DenseMatrix<F>& b, const F& proto) {
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    auto out = dense_filled(a.size(), cols, zero_like(proto));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("dense_multiply: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    }
    return out;
}

template <class F>
bool dense_equal(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(DenseMatrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        F inv = inverse(m[r][c]);
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(DenseMatrix<F> m) {
    return row_reduce(m).size();
}

/// Basis of {x : m·x = 0}; `cols` is needed when m has no rows.
template <class F>
std::vector<std::vector<F>> kernel_basis(DenseMatrix<F> m, std::size_t cols, const F& proto) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, zero_like(proto));
        v[free] = one_like(proto);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<DenseMatrix<F>> dense_inverse(const DenseMatrix<F>& m, const F& proto) {
    std::size_t n = m.size();
    DenseMatrix<F> aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, zero_like(proto));
        aug[i][n + i] = one_like(proto);
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || (n && pivots[n - 1] >= n)) return std::nullopt;
    DenseMatrix<F> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
    return out;
}

}  // namespace gradedk
