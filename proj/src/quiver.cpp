// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/quiver.hpp"

#include "kronq/errors.hpp"
#include "kronq/linalg.hpp"

#include <algorithm>
#include <regex>

namespace kronq {

std::string to_label(const VertexId& v)
{
    if (v.is_det()) return "det" + std::to_string(v.n);
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.n) +
           (v.dual ? "v" : "") + ")";
}

VertexId parse_label(const std::string& s)
{
    static const std::regex det_re(R"(det(\d+))");
    static const std::regex hive_re(R"(\((\d+),(\d+),(\d+)(v?)\))");
    std::smatch mt;
    if (std::regex_match(s, mt, det_re)) return VertexId::det(std::stoi(mt[1]));
    if (std::regex_match(s, mt, hive_re))
        return VertexId::hive(std::stoi(mt[3]), std::stoi(mt[1]), std::stoi(mt[2]), mt[4].length() > 0);
    throw Error(Errc::BadInput, "cannot parse vertex label '" + s + "'");
}

bool IceQuiver::contains(const VertexId& v) const
{
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

int IceQuiver::arrow_count(const VertexId& u, const VertexId& v) const
{
    auto it = arrows.find({u, v});
    return it == arrows.end() ? 0 : it->second;
}

std::vector<VertexId> IceQuiver::mutable_vertices() const
{
    std::vector<VertexId> r;
    for (const auto& v : vertices)
        if (!is_frozen(v)) r.push_back(v);
    return r;
}

void IceQuiver::add_vertex(const VertexId& v, bool is_frozen)
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) vertices.insert(it, v);
    if (is_frozen) frozen.insert(v);
}

void IceQuiver::add_arrow(const VertexId& u, const VertexId& v, int mult)
{
    if (!contains(u)) throw Error(Errc::UnknownVertex, to_label(u));
    if (!contains(v)) throw Error(Errc::UnknownVertex, to_label(v));
    arrows[{u, v}] += mult;
}

void IceQuiver::normalize()
{
    std::map<Arrow, int> out;
    for (const auto& [a, k] : arrows) {
        if (k == 0 || a.first == a.second) continue;
        const Arrow rev{a.second, a.first};
        auto it = arrows.find(rev);
        const int net = k - (it == arrows.end() ? 0 : it->second);
        if (net > 0) out[a] = net;
    }
    arrows = std::move(out);
}

void IceQuiver::drop_frozen_arrows()
{
    std::erase_if(arrows, [this](const auto& e) { return is_frozen(e.first.first) && is_frozen(e.first.second); });
}

void IceQuiver::reverse_arrows()
{
    std::map<Arrow, int> out;
    for (const auto& [a, k] : arrows) out[{a.second, a.first}] = k;
    arrows = std::move(out);
}

bool same_up_to_frozen(const IceQuiver& a, const IceQuiver& b)
{
    if (a.vertices != b.vertices || a.frozen != b.frozen) return false;
    IceQuiver x = a;
    IceQuiver y = b;
    x.drop_frozen_arrows();
    y.drop_frozen_arrows();
    return x.arrows == y.arrows;
}

IceQuiver mutate_quiver(const IceQuiver& q, const VertexId& u)
{
    if (!q.contains(u)) throw Error(Errc::UnknownVertex, to_label(u));
    if (q.is_frozen(u)) throw Error(Errc::MutationAtFrozen, to_label(u));

    std::vector<std::pair<VertexId, int>> ins, outs;
    for (const auto& [a, k] : q.arrows) {
        if (a.second == u) ins.emplace_back(a.first, k);
        if (a.first == u) outs.emplace_back(a.second, k);
    }
    IceQuiver r = q;
    for (const auto& [a, k1] : ins)
        for (const auto& [b, k2] : outs)
            if (!(q.is_frozen(a) && q.is_frozen(b))) {
                int prod = 0;
                int& slot = r.arrows[{a, b}];
                if (__builtin_mul_overflow(k1, k2, &prod) || __builtin_add_overflow(slot, prod, &slot))
                    throw Error(Errc::OutOfRange, "arrow multiplicity overflow mutating at " + to_label(u));
            }

    std::map<Arrow, int> flipped;
    for (const auto& [a, k] : r.arrows) {
        if (a.first == u || a.second == u)
            flipped[{a.second, a.first}] += k;
        else
            flipped[a] += k;
    }
    r.arrows = std::move(flipped);
    r.normalize();
    return r;
}

long long BMatrix::at(const VertexId& u, const VertexId& v) const
{
    auto ri = std::lower_bound(rows.begin(), rows.end(), u);
    auto ci = std::lower_bound(cols.begin(), cols.end(), v);
    if (ri == rows.end() || *ri != u || ci == cols.end() || *ci != v)
        throw Error(Errc::UnknownVertex, to_label(u) + " / " + to_label(v));
    return b[static_cast<std::size_t>(ri - rows.begin())][static_cast<std::size_t>(ci - cols.begin())];
}

BMatrix b_matrix(const IceQuiver& q)
{
    BMatrix m;
    m.rows = q.mutable_vertices();
    m.cols = q.vertices;
    m.b.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
    auto col = [&](const VertexId& v) {
        return static_cast<std::size_t>(std::lower_bound(m.cols.begin(), m.cols.end(), v) - m.cols.begin());
    };
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        const VertexId& u = m.rows[r];
        for (const auto& [a, k] : q.arrows) {
            if (a.first == u) m.b[r][col(a.second)] += k;
            if (a.second == u) m.b[r][col(a.first)] -= k;
        }
    }
    return m;
}

const Weight& WeightConfig::at(const VertexId& v) const
{
    auto it = w.find(v);
    if (it == w.end()) throw Error(Errc::UnknownVertex, "no weight for " + to_label(v));
    return it->second;
}

std::vector<VertexId> weight_defects(const IceQuiver& q, const WeightConfig& w)
{
    std::vector<VertexId> bad;
    for (const auto& u : q.mutable_vertices()) {
        Weight ins(w.width(), 0), outs(w.width(), 0);
        for (const auto& [a, k] : q.arrows) {
            if (a.second == u) {
                const Weight& x = w.at(a.first);
                for (std::size_t c = 0; c < ins.size(); ++c) ins[c] += k * x[c];
            }
            if (a.first == u) {
                const Weight& x = w.at(a.second);
                for (std::size_t c = 0; c < outs.size(); ++c) outs[c] += k * x[c];
            }
        }
        if (ins != outs) bad.push_back(u);
    }
    return bad;
}

WeightConfig mutate_weights(const IceQuiver& q, const WeightConfig& w, const VertexId& u, bool validate)
{
    if (!q.contains(u)) throw Error(Errc::UnknownVertex, to_label(u));
    if (q.is_frozen(u)) throw Error(Errc::MutationAtFrozen, to_label(u));
    if (validate) {
        auto bad = weight_defects(q, w);
        if (!bad.empty()) throw Error(Errc::NotAWeightConfig, "in/out sums differ at " + to_label(bad.front()));
    }
    WeightConfig r = w;
    Weight in(w.width(), 0);
    for (const auto& [a, k] : q.arrows) {
        if (a.second != u) continue;
        const Weight& x = w.at(a.first);
        for (std::size_t c = 0; c < in.size(); ++c) in[c] += k * x[c];
    }
    const Weight& old = w.at(u);
    for (std::size_t c = 0; c < in.size(); ++c) in[c] -= old[c];
    r.w[u] = std::move(in);
    return r;
}

std::size_t b_rank(const IceQuiver& q)
{
    BMatrix m = b_matrix(q);
    QMatrix a(m.b.size());
    for (std::size_t r = 0; r < m.b.size(); ++r)
        for (long long x : m.b[r]) a[r].emplace_back(static_cast<long>(x));
    return rank(std::move(a));
}

}  // namespace kronq
