#pragma once

#include "numeric.hpp"

#include <utility>
#include <vector>

namespace shiish {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form. Zero rows are dropped; returns the
/// pivot column of each remaining row.
inline std::vector<std::size_t> rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

inline std::size_t matrix_rank(RationalMatrix m) { return rref(m).size(); }

template <typename Int>
RationalMatrix to_rational(const std::vector<std::vector<Int>>& rows)
{
    RationalMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> out;
        out.reserve(r.size());
        for (const auto& x : r) out.emplace_back(x);
        m.push_back(std::move(out));
    }
    return m;
}

} // namespace shiish
