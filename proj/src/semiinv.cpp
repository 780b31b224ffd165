// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/semiinv.hpp"

#include "kronq/diamond.hpp"
#include "kronq/errors.hpp"


namespace kronq {

namespace {

ZMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    ZMatrix r(rows, std::vector<mpz_class>(cols));
    for (auto& row : r)
        for (auto& x : row) x = dist(rng);
    return r;
}

void check_sizes(int l, int m)
{
    if (l < 2 || m < 1) throw Error(Errc::SizeTooSmall, "need l >= 2, m >= 1");
}

}  // namespace

ZMatrix Representation::path(int t, int k, int s) const
{
    if (t < 1 || t > l || s < 1 || s > l || k < 1 || k > m)
        throw Error(Errc::IndexOutOfRange, "path endpoints out of range");
    ZMatrix left = identity(static_cast<std::size_t>(s));
    for (int q = s; q < l; ++q) left = matmul(left, D[q]);
    ZMatrix right = identity(static_cast<std::size_t>(l));
    for (int q = l - 1; q >= t; --q) right = matmul(right, F[q]);
    return matmul(matmul(left, A[k]), right);
}

Representation Representation::standard(int l, int m)
{
    check_sizes(l, m);
    Representation r;
    r.l = l;
    r.m = m;
    r.F.resize(l);
    r.D.resize(l);
    for (int k = 1; k < l; ++k) {
        r.F[k].assign(k + 1, std::vector<mpz_class>(k, 0));
        r.D[k].assign(k, std::vector<mpz_class>(k + 1, 0));
        for (int c = 0; c < k; ++c) {
            r.F[k][c][c] = 1;
            r.D[k][c][c] = 1;
        }
    }
    r.A.assign(m + 1, identity(l));
    r.A[0].clear();
    return r;
}

Representation random_representation(int l, int m, std::mt19937_64& rng, int lo, int hi)
{
    check_sizes(l, m);
    Representation r;
    r.l = l;
    r.m = m;
    r.F.resize(l);
    r.D.resize(l);
    for (int k = 1; k < l; ++k) {
        r.F[k] = random_matrix(k + 1, k, rng, lo, hi);
        r.D[k] = random_matrix(k, k + 1, rng, lo, hi);
    }
    r.A.resize(m + 1);
    for (int n = 1; n <= m; ++n) r.A[n] = random_matrix(l, l, rng, lo, hi);
    return r;
}

Weight Presentation::sigma(int l, int m) const
{
    Weight w(static_cast<std::size_t>(2 * l + m), 0);
    for (int s : sources) w[WeightConfig::sigma_index(l, s)] += 1;
    for (int t : targets) w[WeightConfig::sigma_index(l, -t)] -= 1;
    return w;
}

Presentation lifted_presentation(int i, int j, int n, bool dual, int l, int m)
{
    if (i < 0 || j < 0 || i + j < 1 || i + j > l || n < 1 || n > m)
        throw Error(Errc::IndexOutOfRange, "lifted presentation index out of range");

    Presentation p;
    if (j == 0) {
        p.sources = {i};
        p.targets = {i};
        p.entries[{0, 0}] = n;
        return p;
    }

    const int nn = (i + j == l && n % 2 == 1 && n > 1) ? n - 1 : n;
    const int r = nn % 2 == 0 ? (nn - 2) / 2 : (nn - 1) / 2;
    std::vector<int> src{i + j}, tgt{i, j};
    for (int k = 0; k < r; ++k) {
        src.push_back(l);
        tgt.push_back(l);
    }
    std::map<std::pair<int, int>, int> ent;
    ent[{0, 0}] = nn;
    if (r >= 1) ent[{0, 2}] = 1;
    for (int k = 1; k < r; ++k) {
        ent[{k, 1 + k}] = 2 * k;
        ent[{k, 2 + k}] = 2 * k + 1;
    }
    if (nn % 2 == 0) {
        ent[{r, 1}] = nn - 1;
        if (r >= 1) ent[{r, 1 + r}] = nn - 2;
    } else {
        ent[{r, 1}] = nn;
        if (r >= 1) ent[{r, 1 + r}] = nn - 1;
    }
    // The padding chain runs through a_1 .. a_chain in reverse order of
    // the rows; only the leading entry keeps its central map.
    const int chain = nn % 2 == 0 ? nn - 1 : nn;
    for (auto& [pos, k] : ent)
        if (pos != std::pair{0, 0}) k = chain + 1 - k;

    if (dual) {
        std::swap(src, tgt);
        std::map<std::pair<int, int>, int> t;
        for (const auto& [pos, k] : ent) t[{pos.second, pos.first}] = k;
        ent = std::move(t);
    }

    // Zero-dimensional summands carry no rows or columns.
    std::vector<int> src_new(src.size(), -1), tgt_new(tgt.size(), -1);
    for (std::size_t a = 0; a < src.size(); ++a)
        if (src[a] > 0) {
            src_new[a] = static_cast<int>(p.sources.size());
            p.sources.push_back(src[a]);
        }
    for (std::size_t b = 0; b < tgt.size(); ++b)
        if (tgt[b] > 0) {
            tgt_new[b] = static_cast<int>(p.targets.size());
            p.targets.push_back(tgt[b]);
        }
    for (const auto& [pos, k] : ent) {
        const int a = src_new[static_cast<std::size_t>(pos.first)];
        const int b = tgt_new[static_cast<std::size_t>(pos.second)];
        if (a >= 0 && b >= 0) p.entries[{a, b}] = k;
    }
    return p;
}

Presentation vertex_presentation(const VertexId& v, int l, int m)
{
    if (v.is_det()) {
        Presentation p;
        p.sources = {l};
        p.targets = {l};
        p.entries[{0, 0}] = v.n;
        return p;
    }
    if (v.n == 1) return lifted_presentation(0, v.j, 1, false, l, m);
    return lifted_presentation(v.i, v.j, v.n, v.dual, l, m);
}

mpz_class eval_semi_invariant(const Presentation& p, const Representation& rep)
{
    std::vector<int> rs{0}, cs{0};
    for (int s : p.sources) rs.push_back(rs.back() + s);
    for (int t : p.targets) cs.push_back(cs.back() + t);
    if (rs.back() != cs.back()) throw Error(Errc::NonSquare, "presentation is not square");
    const auto n = static_cast<std::size_t>(rs.back());
    ZMatrix x(n, std::vector<mpz_class>(n, 0));
    for (const auto& [pos, k] : p.entries) {
        const auto a = static_cast<std::size_t>(pos.first);
        const auto b = static_cast<std::size_t>(pos.second);
        ZMatrix blk = rep.path(p.targets[b], k, p.sources[a]);
        for (int r = 0; r < p.sources[a]; ++r)
            for (int c = 0; c < p.targets[b]; ++c) x[rs[a] + r][cs[b] + c] = blk[r][c];
    }
    return det_bareiss(std::move(x));
}

std::vector<long long> lambda_formula(int i, int j, int n, int l, int m)
{
    if (i < 0 || j < 0 || i + j < 1 || i + j > l || n < 1 || n > m)
        throw Error(Errc::IndexOutOfRange, "weight index out of range");
    std::vector<long long> lam(static_cast<std::size_t>(m), 0);
    if (j == 0) {
        lam[n - 1] = i;
        return lam;
    }
    const int nn = (i + j == l && n % 2 == 1 && n > 1) ? n - 1 : n;
    lam[nn - 1] += i;
    const int top = nn % 2 == 1 ? nn : nn - 1;
    for (int k = 1; k <= top; ++k) lam[k - 1] += (k % 2 == 1) ? j : l - j;
    return lam;
}

std::vector<long long> lambda_probe(const Presentation& p, int l, int m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Representation rep = random_representation(l, m, rng, -3, 3);
        const mpz_class base = eval_semi_invariant(p, rep);
        if (sgn(base) == 0) continue;
        std::vector<long long> lam(static_cast<std::size_t>(m), 0);
        for (int k = 1; k <= m; ++k) {
            Representation scaled = rep;
            for (auto& row : scaled.A[k])
                for (auto& x : row) x *= 2;
            mpz_class val = eval_semi_invariant(p, scaled);
            long long e = 0;
            while (val != base) {
                if (!mpz_divisible_2exp_p(val.get_mpz_t(), 1))
                    throw Error(Errc::DegenerateSample, "semi-invariant is not homogeneous in a_" + std::to_string(k));
                val /= 2;
                ++e;
            }
            lam[k - 1] = e;
        }
        return lam;
    }
    throw Error(Errc::DegenerateSample, "semi-invariant vanished on every probe sample");
}

Weight sigma_lambda_weight(int i, int j, int n, bool dual, int l, int m)
{
    const Presentation p = lifted_presentation(i, j, n, dual, l, m);
    Weight w = p.sigma(l, m);
    const auto lam = dual && j > 0 ? lambda_probe(p, l, m) : lambda_formula(i, j, n, l, m);
    for (int k = 1; k <= m; ++k) w[WeightConfig::lambda_index(l, k)] = lam[k - 1];
    return w;
}

Weight vertex_weight(const VertexId& v, int l, int m)
{
    if (v.is_det()) {
        Weight w(static_cast<std::size_t>(2 * l + m), 0);
        w[WeightConfig::sigma_index(l, l)] = 1;
        w[WeightConfig::sigma_index(l, -l)] = -1;
        w[WeightConfig::lambda_index(l, v.n)] = l;
        return w;
    }
    if (v.n == 1) return sigma_lambda_weight(0, v.j, 1, false, l, m);
    return sigma_lambda_weight(v.i, v.j, v.n, v.dual, l, m);
}

ExchangeReport check_exchange_relations(int l, int m, const Representation& rep)
{
    return check_exchange_relations(build_tilde(l, m).quiver, l, m, rep);
}

ExchangeReport check_exchange_relations(const IceQuiver& q, int l, int m, const Representation& rep)
{
    std::map<VertexId, mpz_class> val;
    for (const auto& v : q.vertices) {
        mpz_class x = eval_semi_invariant(vertex_presentation(v, l, m), rep);
        if (sgn(x) == 0) throw Error(Errc::DegenerateSample, "vanishes at " + to_label(v));
        val.emplace(v, std::move(x));
    }
    ExchangeReport report;
    for (const auto& u : q.mutable_vertices()) {
        mpz_class in = 1, out = 1;
        for (const auto& [a, k] : q.arrows) {
            for (int t = 0; t < k; ++t) {
                if (a.second == u) in *= val.at(a.first);
                if (a.first == u) out *= val.at(a.second);
            }
        }
        const mpz_class& s = val.at(u);
        const mpz_class plus = in + out;
        const mpz_class minus = in - out;
        const bool ok = mpz_divisible_p(plus.get_mpz_t(), s.get_mpz_t()) ||
                        mpz_divisible_p(minus.get_mpz_t(), s.get_mpz_t());
        ++report.checked;
        if (!ok) report.failures.push_back(u);
    }
    return report;
}

}  // namespace kronq
