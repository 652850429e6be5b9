#pragma once

#include "g2sc/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2sc {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix<K>(rows, std::vector<K>(cols, K(0)));
}

template <class K>
Matrix<K> identity_matrix(std::size_t n) {
    auto m = zero_matrix<K>(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = K(1);
    return m;
}

template <class K>
Matrix<K> mat_mul(const Matrix<K>& a, const Matrix<K>& b) {
    auto r = zero_matrix<K>(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == K(0)) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

/**
 * In-place reduced row echelon form. Returns the pivot column of each pivot row.
 * `companion` rows receive the same row operations (used for certificates).
 */
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m, std::size_t ncols, Matrix<K>* companion = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == K(0)) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        if (companion) std::swap((*companion)[p], (*companion)[row]);
        K inv = K(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        if (companion)
            for (auto& x : (*companion)[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == K(0)) continue;
            K factor = m[r][col];
            for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= factor * m[row][j];
            if (companion)
                for (std::size_t j = 0; j < (*companion)[r].size(); ++j)
                    (*companion)[r][j] -= factor * (*companion)[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    return rref(m, cols).size();
}

/** Basis of {x : m x = 0}. */
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, std::size_t ncols) {
    auto pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(ncols, K(0));
        v[free] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/** Inverse of a square matrix, or nullopt if singular. */
template <class K>
std::optional<Matrix<K>> inverse(Matrix<K> m) {
    std::size_t n = m.size();
    auto inv = identity_matrix<K>(n);
    auto pivots = rref(m, n, &inv);
    if (pivots.size() != n) return std::nullopt;
    return inv;
}

template <class K>
K determinant(Matrix<K> m) {
    std::size_t n = m.size();
    K det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == K(0)) ++p;
        if (p == n) return K(0);
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        K inv = K(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == K(0)) continue;
            K factor = m[r][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    return det;
}

/** A x = b over Q. */
struct LinSystem {
    Matrix<Rat> a;
    std::vector<Rat> b;
    std::size_t num_vars = 0;
};

/**
 * Either a particular solution (free variables set to 0) or a row combination y with
 * y^T A = 0 and y^T b = value != 0.
 */
struct LinResult {
    bool consistent = false;
    std::vector<Rat> solution;
    std::vector<Rat> certificate;
    Rat value;
};

LinResult solve_linear(const LinSystem& sys);

/** Multiplies the certificate out: true iff y^T A = 0 and y^T b != 0. */
bool verify_inconsistency(const LinSystem& sys, const std::vector<Rat>& y);

std::string format_equation(const std::vector<Rat>& row, const Rat& rhs, const std::vector<std::string>& names);

}  // namespace g2sc
