// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/lp.hpp"

#include "kronq/errors.hpp"

#include <utility>

namespace kronq {

// Tableau layout follows the usual dense formulation: rows 0..m-1 are
// constraints, row m the objective, row m+1 the phase-one objective; column
// n is the artificial variable and column n+1 the right-hand side.

Simplex::Simplex(const QMatrix& a, const std::vector<mpq_class>& b)
    : m_(static_cast<int>(b.size())),
      n_(a.empty() ? 0 : static_cast<int>(a[0].size())),
      basis_(m_),
      nonbasis_(n_ + 1),
      d_(m_ + 2, std::vector<mpq_class>(n_ + 2, 0))
{
    if (static_cast<int>(a.size()) != m_) throw Error(Errc::SizeMismatch, "constraint rows and bounds differ");
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
        basis_[i] = n_ + i;
        d_[i][n_] = -1;
        d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) nonbasis_[j] = j;
    nonbasis_[n_] = -1;
    d_[m_ + 1][n_] = 1;
}

void Simplex::pivot(int r, int s)
{
    const mpq_class inv = 1 / d_[r][s];
    auto& pr = d_[r];
    for (int i = 0; i < m_ + 2; ++i) {
        if (i == r || sgn(d_[i][s]) == 0) continue;
        auto& row = d_[i];
        const mpq_class f = row[s] * inv;
        for (int j = 0; j < n_ + 2; ++j)
            if (sgn(pr[j]) != 0) row[j] -= pr[j] * f;
        row[s] = pr[s] * f;
    }
    for (int j = 0; j < n_ + 2; ++j)
        if (j != s) pr[j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
        if (i != r) d_[i][s] *= -inv;
    pr[s] = inv;
    std::swap(basis_[r], nonbasis_[s]);
}

bool Simplex::run(int phase)
{
    const int x = m_ + phase - 1;
    // Dantzig's rule; after a generous number of pivots fall back to Bland's
    // rule, which cannot cycle.
    const int dantzig_limit = 4 * (m_ + n_) + 50;
    for (int iter = 0;; ++iter) {
        const bool bland = iter > dantzig_limit;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
            if (nonbasis_[j] == -phase) continue;
            if (sgn(d_[x][j]) >= 0) continue;
            if (s == -1) {
                s = j;
                continue;
            }
            if (bland) {
                if (nonbasis_[j] < nonbasis_[s]) s = j;
            } else {
                const int c = cmp(d_[x][j], d_[x][s]);
                if (c < 0 || (c == 0 && nonbasis_[j] < nonbasis_[s])) s = j;
            }
        }
        if (s == -1) return true;
        int r = -1;
        mpq_class best;
        for (int i = 0; i < m_; ++i) {
            if (sgn(d_[i][s]) <= 0) continue;
            mpq_class ratio = d_[i][n_ + 1] / d_[i][s];
            if (r == -1) {
                r = i;
                best = std::move(ratio);
                continue;
            }
            const int c = cmp(ratio, best);
            if (c < 0 || (c == 0 && basis_[i] < basis_[r])) {
                r = i;
                best = std::move(ratio);
            }
        }
        if (r == -1) return false;
        pivot(r, s);
    }
}

bool Simplex::feasible()
{
    if (phase1_done_) return feasible_;
    phase1_done_ = true;
    int r = 0;
    for (int i = 1; i < m_; ++i)
        if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    if (m_ > 0 && sgn(d_[r][n_ + 1]) < 0) {
        pivot(r, n_);
        if (!run(2) || sgn(d_[m_ + 1][n_ + 1]) < 0) {
            feasible_ = false;
            return false;
        }
        // Drive the artificial variable out of the basis when it lingers at
        // level zero; an all-zero row is redundant and may keep it.
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] != -1) continue;
            for (int j = 0; j <= n_; ++j)
                if (sgn(d_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
        }
    }
    feasible_ = true;
    return true;
}

LpResult Simplex::maximize(const std::vector<mpq_class>& c) const
{
    if (!phase1_done_) throw Error(Errc::BadInput, "maximize called before feasible()");
    LpResult res;
    if (!feasible_) return res;

    Simplex t = *this;
    auto cost = [&](int var) -> mpq_class { return var >= 0 && var < n_ ? c[static_cast<std::size_t>(var)] : mpq_class(0); };
    for (int j = 0; j < n_ + 2; ++j) t.d_[m_][j] = 0;
    for (int j = 0; j <= n_; ++j) t.d_[m_][j] = -cost(t.nonbasis_[j]);
    for (int i = 0; i < m_; ++i) {
        const mpq_class cb = cost(t.basis_[i]);
        if (sgn(cb) == 0) continue;
        for (int j = 0; j <= n_; ++j) t.d_[m_][j] += cb * t.d_[i][j];
        t.d_[m_][n_ + 1] += cb * t.d_[i][n_ + 1];
    }
    if (!t.run(1)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.value = t.d_[m_][n_ + 1];
    res.x.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < m_; ++i)
        if (t.basis_[i] >= 0 && t.basis_[i] < n_) res.x[static_cast<std::size_t>(t.basis_[i])] = t.d_[i][n_ + 1];
    return res;
}

}  // namespace kronq
