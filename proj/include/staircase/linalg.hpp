#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace staircase::detail {

// Fraction-free determinant (Bareiss). Exact for any integer type whose range
// holds every minor of the input matrix.
template <typename Int>
Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Int(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = Int(0);
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

template <typename Int>
struct CramerResult {
    bool singular = true;
    Int det{};                 // determinant of the coefficient matrix
    std::vector<Int> numer{};  // solution x_i = numer[i] / det
};

// Solves M x = b exactly by Cramer's rule.
template <typename Int>
CramerResult<Int> solve_cramer(const std::vector<std::vector<Int>>& m, const std::vector<Int>& b) {
    CramerResult<Int> r;
    r.det = det_bareiss(m);
    if (r.det == 0) return r;
    r.singular = false;
    const std::size_t n = m.size();
    r.numer.resize(n);
    for (std::size_t col = 0; col < n; ++col) {
        auto mc = m;
        for (std::size_t row = 0; row < n; ++row) mc[row][col] = b[row];
        r.numer[col] = det_bareiss(std::move(mc));
    }
    return r;
}

// Rank over Q, by plain Gaussian elimination on exact rationals.
inline std::size_t rank_rational(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Affine dimension of a point set: rank of the difference vectors.
inline std::size_t affine_dim(const std::vector<std::vector<Rational>>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<Rational>> diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank_rational(std::move(diffs));
}

} // namespace staircase::detail
