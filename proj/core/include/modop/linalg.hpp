#ifndef MODOP_LINALG_HPP
#define MODOP_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "modop/rational.hpp"

namespace modop {

// Dense exact matrices, only used at desk scale (block inversion of omega,
// rank counts on invariant bases, the order-by-order master-equation solver).
using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix rat_matrix(size_t rows, size_t cols) {
    return RatMatrix(rows, std::vector<Rat>(cols, Rat(0)));
}

// Row-reduce in place; returns the pivot columns.
inline std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

// Inverse of a square matrix; nullopt if singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
    size_t n = a.size();
    RatMatrix aug = rat_matrix(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse: not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Rat(1);
    }
    auto piv = rref(aug);
    if (piv.size() != n) return std::nullopt;
    RatMatrix inv = rat_matrix(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// One solution of A x = b, if any (least-structure: free variables set to 0).
inline std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    RatMatrix aug = rat_matrix(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    // Inconsistent iff a pivot lands in the last column.
    if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

}  // namespace modop

#endif
