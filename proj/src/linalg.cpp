/*
   Copyright 2026 The tchebint authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tchebint/linalg.hpp"

#include <utility>

namespace tchebint::linalg {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> nullspace(Matrix m, std::size_t cols) {
    for (auto& row : m) row.resize(cols);
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(Matrix m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return std::nullopt;
        m[i].resize(2 * n, Rational(0));
        m[i][n + i] = 1;
    }
    Matrix work = m;
    // only eliminate on the left block
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(work[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(work[p], work[c]);
        const Rational inv = 1 / work[c][c];
        for (auto& x : work[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(work[i][c]) == 0) continue;
            const Rational f = work[i][c];
            for (std::size_t k = c; k < 2 * n; ++k) work[i][k] -= f * work[c][k];
        }
    }
    Matrix out(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = work[i][n + j];
    return out;
}

std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols) {
    // echelon rows kept with their pivot column
    std::vector<std::pair<std::size_t, Vector>> basis;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m.size() && basis.size() < cols; ++i) {
        Vector v = m[i];
        v.resize(cols);
        for (const auto& [pc, b] : basis) {
            if (sgn(v[pc]) == 0) continue;
            const Rational f = v[pc];
            for (std::size_t k = 0; k < cols; ++k) v[k] -= f * b[k];
        }
        std::size_t pc = 0;
        while (pc < cols && sgn(v[pc]) == 0) ++pc;
        if (pc == cols) continue;
        const Rational inv = 1 / v[pc];
        for (auto& x : v) x *= inv;
        // keep basis fully reduced in the new pivot column
        for (auto& [qc, b] : basis) {
            if (sgn(b[pc]) == 0) continue;
            const Rational f = b[pc];
            for (std::size_t k = 0; k < cols; ++k) b[k] -= f * v[k];
        }
        basis.emplace_back(pc, std::move(v));
        chosen.push_back(i);
    }
    return chosen;
}

Vector multiply(const Matrix& m, const Vector& v) {
    Vector out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sgn(v[j]) != 0) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace tchebint::linalg
