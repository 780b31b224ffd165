// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/diamond.hpp"

#include "kronq/boundary.hpp"
#include "kronq/errors.hpp"
#include "kronq/linalg.hpp"
#include "kronq/semiinv.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace kronq {

namespace {

using Dir = std::pair<int, int>;

constexpr std::array<Dir, 3> kCwDirs{{{0, -1}, {1, 0}, {-1, 1}}};
constexpr std::array<Dir, 3> kCcwDirs{{{0, 1}, {-1, 0}, {1, -1}}};

void check_sizes(int l, int m)
{
    if (l < 2) throw Error(Errc::SizeTooSmall, "l must be at least 2");
    if (m < 2) throw Error(Errc::SizeTooSmall, "m must be at least 2");
}

bool in_hive(int l, int i, int j)
{
    return i >= 0 && j >= 0 && i + j >= 1 && i + j <= l && !(i == l && j == 0) && !(i == 0 && j == l);
}

std::vector<Dir> hive_points(int l)
{
    std::vector<Dir> pts;
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j)
            if (in_hive(l, i, j)) pts.emplace_back(i, j);
    return pts;
}

// Bitmask of the hive edges a point lies on: j=0, i=0, i+j=l.
unsigned edges_of(int l, int i, int j)
{
    return (j == 0 ? 1u : 0u) | (i == 0 ? 2u : 0u) | (i + j == l ? 4u : 0u);
}

// Calls f(p, q, dir_index) for every hive arrow p -> q in the given
// orientation.  Pairs on a common boundary edge are skipped; the gluing
// rules supply those.
template <class F>
void for_each_hive_arrow(int l, const std::array<Dir, 3>& dirs, F&& f)
{
    for (const auto& [i, j] : hive_points(l)) {
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            const int pi = i + dirs[d].first;
            const int pj = j + dirs[d].second;
            if (!in_hive(l, pi, pj)) continue;
            if (edges_of(l, i, j) & edges_of(l, pi, pj)) continue;
            f(Dir{i, j}, Dir{pi, pj}, d);
        }
    }
}

bool is_bar_frozen(const VertexId& v, int l, int m)
{
    if (v.is_det()) return true;
    if (v.n != m) return false;
    return m % 2 == 0 ? v.i + v.j == l : v.i == 0;
}

void finish(IceQuiver& q, Chirality chirality)
{
    q.normalize();
    q.drop_frozen_arrows();
    if (chirality == Chirality::Mirrored) q.reverse_arrows();
}

}  // namespace

IceQuiver hive(const HiveSpec& spec)
{
    if (spec.l < 2) throw Error(Errc::SizeTooSmall, "l must be at least 2");
    const int l = spec.l;
    IceQuiver q;
    for (const auto& [i, j] : hive_points(l))
        q.add_vertex(VertexId::hive(spec.n, i, j, spec.dual), edges_of(l, i, j) != 0);
    const auto& dirs = spec.orientation == Orientation::Cw ? kCwDirs : kCcwDirs;
    for_each_hive_arrow(l, dirs, [&](Dir p, Dir t, std::size_t) {
        q.add_arrow(VertexId::hive(spec.n, p.first, p.second, spec.dual),
                    VertexId::hive(spec.n, t.first, t.second, spec.dual));
    });
    return q;
}

VertexId canonical_vertex(int n, int i, int j, bool dual, int l, int m)
{
    if (n < 1 || n > m || !in_hive(l, i, j))
        throw Error(Errc::OutOfRange, "raw vertex (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(n) + ") out of range");
    if (n == 1) {
        if (i != 0) throw Error(Errc::OutOfRange, "diamond 1 only holds edge vertices (0,j,1)");
        return VertexId::hive(1, 0, j, false);
    }
    if (j == 0) dual = false;
    if (i == 0 && n % 2 == 0) {
        --n;
        if (n == 1) return VertexId::hive(1, 0, j, false);
    }
    if (i + j == l && n % 2 == 1 && n > 1) --n;
    return VertexId::hive(n, i, j, dual);
}

std::size_t expected_vertex_count(int l, int m)
{
    return static_cast<std::size_t>((l - 1) * (l + 2) + (l * l - 1) * (m - 2) + m);
}

Seed build_tilde(int l, int m, Chirality chirality)
{
    check_sizes(l, m);
    IceQuiver q;
    auto cv = [l, m](int n, int i, int j, bool d) { return canonical_vertex(n, i, j, d, l, m); };

    for (int n = 2; n <= m; ++n)
        for (bool d : {false, true})
            for (const auto& [i, j] : hive_points(l)) {
                const VertexId v = cv(n, i, j, d);
                q.add_vertex(v, is_bar_frozen(v, l, m));
            }
    for (int n = 1; n <= m; ++n) q.add_vertex(VertexId::det(n), true);

    // Hives alternate orientation from one diamond to the next.
    for (int n = 2; n <= m; ++n) {
        const bool cw = n % 2 == 0;
        for (bool d : {false, true})
            for_each_hive_arrow(l, cw ? kCwDirs : kCcwDirs, [&](Dir p, Dir t, std::size_t) {
                q.add_arrow(cv(n, p.first, p.second, d), cv(n, t.first, t.second, d));
            });
        for (int i = 1; i + 1 < l; ++i) {
            const VertexId a = cv(n, i, 0, false);
            const VertexId b = cv(n, i + 1, 0, false);
            cw ? q.add_arrow(a, b) : q.add_arrow(b, a);
        }
    }
    for (int j = 1; j + 1 < l; ++j) q.add_arrow(cv(2, 0, j + 1, false), cv(2, 0, j, false));

    q.add_arrow(VertexId::det(1), cv(2, 0, l - 1, false));
    for (int n = 2; n <= m; ++n) {
        const VertexId det = VertexId::det(n);
        q.add_arrow(cv(n, l - 1, 0, false), det);
        for (bool d : {false, true})
            q.add_arrow(det, n % 2 == 0 ? cv(n, l - 1, 1, d) : cv(n, 0, l - 1, d));
    }
    finish(q, chirality);

    Seed s;
    s.l = l;
    s.m = m;
    s.quiver = std::move(q);
    s.weights.l = l;
    s.weights.m = m;
    for (const auto& v : s.quiver.vertices) s.weights.w[v] = vertex_weight(v, l, m);
    auto bad = weight_defects(s.quiver, s.weights);
    if (!bad.empty())
        throw Error(Errc::WeightConfigInconsistent, "B*sigma != 0 at " + to_label(bad.front()));
    return s;
}

std::vector<VertexId> twist_sequence(int l, int m, int n_odd)
{
    check_sizes(l, m);
    if (n_odd == 2 && m >= 2) return {};
    if (n_odd < 3 || n_odd > m || n_odd % 2 == 0)
        throw Error(Errc::UnsupportedDiamond, "no twist for diamond " + std::to_string(n_odd));
    std::vector<VertexId> seq;
    for (bool d : {false, true}) {
        for (int t = 1; t <= l - 2; ++t) {
            std::vector<Dir> pts;
            for (int i = 1; i < l; ++i)
                for (int j = 1; j < l; ++j)
                    if (i + j <= l - t) pts.emplace_back(i, j);
            std::sort(pts.begin(), pts.end(), [](const Dir& a, const Dir& b) {
                return std::pair{a.first + a.second, a.first} < std::pair{b.first + b.second, b.first};
            });
            for (const auto& [i, j] : pts) seq.push_back(VertexId::hive(n_odd, i, j, d));
        }
    }
    return seq;
}

std::vector<VertexId> full_twist(int l, int m)
{
    std::vector<VertexId> seq;
    for (int n = 3; n <= m; n += 2) {
        auto s = twist_sequence(l, m, n);
        seq.insert(seq.end(), s.begin(), s.end());
    }
    return seq;
}

VertexId position_vertex(int n, int i, int j, bool dual, int l, int m)
{
    if (n < 2 || n > m || !in_hive(l, i, j)) throw Error(Errc::OutOfRange, "position out of range");
    if (j == 0) return VertexId::hive(n, i, 0, false);
    if (i == 0) {
        if (n == 2) return VertexId::hive(1, 0, j, false);
        return position_vertex(n - 1, j, l - j, dual, l, m);
    }
    if (n % 2 == 0) return canonical_vertex(n, i, j, dual, l, m);
    if (i + j == l) return VertexId::hive(n, 0, i, dual);
    return VertexId::hive(n, j, l - i - j, dual);
}

namespace {

// Arrow list of the even-form template with the type of each arrow.
std::vector<std::pair<Arrow, unsigned>> template_arrows(int l, int m)
{
    std::vector<std::pair<Arrow, unsigned>> out;
    auto at = [l, m](int n, int i, int j, bool d) { return position_vertex(n, i, j, d, l, m); };
    const unsigned bc = TypeB | TypeC;
    for (int n = 2; n <= m; ++n) {
        for (bool d : {false, true}) {
            // Directions (0,-1), (+1,0), (-1,+1).
            const std::array<unsigned, 3> types{d ? TypeC : TypeB, TypeA, d ? TypeB : TypeC};
            for_each_hive_arrow(l, kCwDirs, [&](Dir p, Dir t, std::size_t k) {
                out.push_back({{at(n, p.first, p.second, d), at(n, t.first, t.second, d)}, types[k]});
            });
            if (n == 2 && d) continue;  // edge 1 is shared by both hives
            for (int j = 1; j + 1 < l; ++j)
                out.push_back({{at(n, 0, j + 1, d), at(n, 0, j, d)}, n == 2 ? bc : types[0]});
        }
        for (int i = 1; i + 1 < l; ++i) out.push_back({{at(n, i, 0, false), at(n, i + 1, 0, false)}, TypeA});
    }
    out.push_back({{VertexId::det(1), VertexId::hive(1, 0, l - 1, false)}, bc});
    for (int n = 2; n <= m; ++n) {
        out.push_back({{at(n, l - 1, 0, false), VertexId::det(n)}, TypeA});
        out.push_back({{VertexId::det(n), at(n, l - 1, 1, false)}, TypeC});
        out.push_back({{VertexId::det(n), at(n, l - 1, 1, true)}, TypeB});
    }
    return out;
}

}  // namespace

IceQuiver bar_quiver(int l, int m, Chirality chirality)
{
    check_sizes(l, m);
    IceQuiver q;
    for (int n = 2; n <= m; ++n)
        for (bool d : {false, true})
            for (const auto& [i, j] : hive_points(l)) {
                const VertexId v = position_vertex(n, i, j, d, l, m);
                q.add_vertex(v, is_bar_frozen(v, l, m));
            }
    for (int n = 1; n <= m; ++n) q.add_vertex(VertexId::det(n), true);
    for (const auto& [a, type] : template_arrows(l, m)) {
        (void)type;
        q.add_arrow(a.first, a.second);
    }
    finish(q, chirality);
    return q;
}

std::map<Arrow, unsigned> arrow_types(int l, int m, Chirality chirality)
{
    const IceQuiver q = bar_quiver(l, m, chirality);
    std::map<Arrow, unsigned> types;
    for (const auto& [a, type] : template_arrows(l, m)) {
        const Arrow key = chirality == Chirality::Mirrored ? Arrow{a.second, a.first} : a;
        if (q.arrow_count(key.first, key.second) > 0) types[key] |= type;
    }
    return types;
}

BarSeed build_bar(int l, int m, Chirality chirality)
{
    const Seed tilde = build_tilde(l, m, chirality);

    // Route R1: transport the lifted weights along the twist.
    IceQuiver q = tilde.quiver;
    WeightConfig w = tilde.weights;
    for (const auto& u : full_twist(l, m)) {
        w = mutate_weights(q, w, u, false);
        q = mutate_quiver(q, u);
    }
    if (!weight_defects(q, w).empty())
        throw Error(Errc::WeightConfigInconsistent, "transported weights fail B*sigma = 0");

    BarSeed out;
    out.l = l;
    out.m = m;
    out.quiver = bar_quiver(l, m, chirality);
    q.drop_frozen_arrows();
    if (!same_up_to_frozen(q, out.quiver))
        throw Error(Errc::WeightRoutesDisagree, "twisted quiver differs from the direct construction");

    // Route R2: columns ±j (j < l) are boundary path dimensions; the rest are
    // solved from B*sigma = 0 with frozen rows held fixed.
    WeightConfig r2;
    r2.l = l;
    r2.m = m;
    for (const auto& v : out.quiver.vertices) r2.w[v] = Weight(w.width(), 0);
    if (chirality == Chirality::Standard) {
        for (const auto& v : boundary_frozen(l, m)) {
            const int col = boundary_column(v, l, m);
            const PathModule t = boundary_path(out.quiver, l, m, v);
            for (const auto& [u, k] : t.dim)
                r2.w[u][WeightConfig::sigma_index(l, col)] = col < 0 ? -k : k;
        }
    } else {
        // Paths only exist in the standard chirality; reuse R1 for these columns.
        for (const auto& v : out.quiver.vertices)
            for (int j = 1; j < l; ++j)
                for (int col : {-j, j}) {
                    const auto c = WeightConfig::sigma_index(l, col);
                    r2.w[v][c] = w.at(v)[c];
                }
    }

    std::vector<std::size_t> rest{WeightConfig::sigma_index(l, -l), WeightConfig::sigma_index(l, l)};
    for (int k = 1; k <= m; ++k) rest.push_back(WeightConfig::lambda_index(l, k));
    for (const auto& v : out.quiver.frozen)
        for (std::size_t c : rest) r2.w[v][c] = tilde.weights.at(v)[c];

    const BMatrix b = b_matrix(out.quiver);
    std::vector<std::size_t> mut_cols, fr_cols;
    for (std::size_t c = 0; c < b.cols.size(); ++c)
        (out.quiver.is_frozen(b.cols[c]) ? fr_cols : mut_cols).push_back(c);
    QMatrix bm(b.rows.size()), rhs(b.rows.size(), std::vector<mpq_class>(rest.size(), 0));
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
        for (std::size_t c : mut_cols) bm[r].emplace_back(static_cast<long>(b.b[r][c]));
        for (std::size_t k = 0; k < rest.size(); ++k)
            for (std::size_t c : fr_cols)
                rhs[r][k] -= mpq_class(static_cast<long>(b.b[r][c])) * static_cast<long>(r2.w[b.cols[c]][rest[k]]);
    }
    if (auto x = solve(bm, rhs)) {
        out.r2_determined = true;
        for (std::size_t r = 0; r < mut_cols.size(); ++r)
            for (std::size_t k = 0; k < rest.size(); ++k) {
                const mpq_class& val = (*x)[r][k];
                if (val.get_den() != 1)
                    throw Error(Errc::WeightRoutesDisagree, "non-integral weight solved at " + to_label(b.cols[mut_cols[r]]));
                r2.w[b.cols[mut_cols[r]]][rest[k]] = val.get_num().get_si();
            }
    } else {
        out.warnings.push_back("UnderdeterminedWeights: mutable block of B is singular; R1 weights are authoritative");
        for (const auto& v : out.quiver.mutable_vertices())
            for (std::size_t c : rest) r2.w[v][c] = w.at(v)[c];
    }

    for (const auto& v : out.quiver.vertices)
        if (r2.w.at(v) != w.at(v))
            throw Error(Errc::WeightRoutesDisagree, "weight routes disagree at " + to_label(v));
    if (!weight_defects(out.quiver, w).empty())
        throw Error(Errc::WeightConfigInconsistent, "B*sigma != 0 on the twisted quiver");

    out.weights = std::move(w);
    return out;
}

VertexId display_label(const VertexId& v, int l)
{
    if (!v.is_det() && v.n % 2 == 1 && v.j == 0 && v.n > 1) return VertexId::hive(v.n, l - v.i, 0, false);
    return v;
}

VertexId from_display_label(const VertexId& v, int l)
{
    // The example also writes some diagonal vertices with a dual mark;
    // diagonal vertices are always plain.
    VertexId w = v;
    if (!w.is_det() && w.j == 0) w.dual = false;
    return display_label(w, l);
}

}  // namespace kronq
