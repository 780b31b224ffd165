// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/linalg.hpp"

#include "kronq/errors.hpp"

#include <utility>

namespace kronq {

ZMatrix identity(std::size_t n)
{
    ZMatrix r(n, std::vector<mpz_class>(n, 0));
    for (std::size_t k = 0; k < n; ++k) r[k][k] = 1;
    return r;
}

ZMatrix matmul(const ZMatrix& a, const ZMatrix& b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    ZMatrix r(a.size(), std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw Error(Errc::NonSquare, "matmul shape mismatch");
        for (std::size_t t = 0; t < inner; ++t) {
            if (sgn(a[i][t]) == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) r[i][c] += a[i][t] * b[t][c];
        }
    }
    return r;
}

mpz_class det_bareiss(ZMatrix a)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw Error(Errc::NonSquare, "determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(a[r][k]) == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                a[r][c] = a[r][c] * a[k][k] - a[r][k] * a[k][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t rank(QMatrix a)
{
    std::size_t rk = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rk], a[p]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            mpq_class f = a[r][c] / a[rk][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rk][k];
        }
        ++rk;
    }
    return rk;
}

std::optional<QMatrix> solve(QMatrix a, QMatrix b)
{
    const std::size_t n = a.size();
    const std::size_t w = b.empty() ? 0 : b[0].size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        mpq_class inv = 1 / a[c][c];
        for (std::size_t k = c; k < n; ++k) a[c][k] *= inv;
        for (std::size_t k = 0; k < w; ++k) b[c][k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            mpq_class f = a[r][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            for (std::size_t k = 0; k < w; ++k) b[r][k] -= f * b[c][k];
        }
    }
    return b;
}

}  // namespace kronq
