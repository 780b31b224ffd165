// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/boundary.hpp"

#include "kronq/diamond.hpp"
#include "kronq/errors.hpp"

#include <algorithm>

namespace kronq {

PathModule PathModule::from_path(std::vector<VertexId> path)
{
    PathModule t;
    t.path = std::move(path);
    for (const auto& v : t.path) ++t.dim[v];
    return t;
}

int PathModule::total_dim() const
{
    return static_cast<int>(path.size());
}

std::vector<VertexId> boundary_frozen(int l, int m)
{
    std::vector<VertexId> out;
    for (bool dual : {false, true})
        for (int j = 1; j < l; ++j)
            out.push_back(m % 2 == 0 ? VertexId::hive(m, l - j, j, dual) : VertexId::hive(m, 0, j, dual));
    return out;
}

namespace {

void require_boundary(int l, int m, const VertexId& v)
{
    const auto b = boundary_frozen(l, m);
    if (std::find(b.begin(), b.end(), v) == b.end())
        throw Error(Errc::NotBoundaryFrozen, to_label(v) + " is not a boundary frozen vertex");
}

}  // namespace

int boundary_column(const VertexId& v, int l, int m)
{
    require_boundary(l, m, v);
    return v.dual ? v.j : -v.j;
}

std::vector<VertexId> boundary_path_vertices(int l, int m, const VertexId& v)
{
    if (l < 2 || m < 2) throw Error(Errc::SizeTooSmall, "need l, m >= 2");
    require_boundary(l, m, v);
    const bool h = v.dual;
    const int a = m % 2 == 0 ? v.i : v.j;
    const int c = m % 2 == 1 ? a : l - a;
    auto side = [h](int n) { return n % 2 == 0 ? h : !h; };
    auto at = [l, m](int n, int i, int j, bool d) { return position_vertex(n, i, j, d, l, m); };

    std::vector<VertexId> seq;
    // Inward along the constant coordinate c, then down the diagonal and
    // out through the shared edge into the previous diamond.
    for (int n = m; n >= 2; --n) {
        const bool s = side(n);
        for (int jj = l - c; jj >= 1; --jj) seq.push_back(at(n, c, jj, s));
        for (int t = 0; t < c; ++t) seq.push_back(at(n, c - t, t, !s));
    }
    // Reflected at edge 1, back out through every diamond on side h.
    int b = c;
    for (int n = 2; n <= m; ++n) {
        for (int ii = 0; ii < l - b; ++ii) seq.push_back(at(n, ii, b, h));
        b = l - b;
    }
    seq.push_back(v);
    return seq;
}

PathModule boundary_path(int l, int m, const VertexId& v)
{
    return boundary_path(bar_quiver(l, m), l, m, v);
}

PathModule boundary_path(const IceQuiver& bar, int l, int m, const VertexId& v)
{
    auto seq = boundary_path_vertices(l, m, v);
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (bar.arrow_count(seq[k], seq[k + 1]) == 0)
            throw Error(Errc::ArrowMissing, to_label(seq[k]) + " -> " + to_label(seq[k + 1]));
    return PathModule::from_path(std::move(seq));
}

PathModule diagonal_module(int l, int m, int n, DiagonalOrientation orientation)
{
    if (n < 1 || n > m) throw Error(Errc::IndexOutOfRange, "diagonal index out of range");
    std::vector<VertexId> seq;
    if (n >= 2) {
        for (int i = 1; i < l; ++i) seq.push_back(VertexId::hive(n, i, 0));
        if (orientation == DiagonalOrientation::Reversed) std::reverse(seq.begin(), seq.end());
    }
    seq.push_back(VertexId::det(n));
    return PathModule::from_path(std::move(seq));
}

std::vector<DimVector> submodule_dims(const PathModule& t, bool strict)
{
    std::vector<DimVector> out;
    DimVector acc;
    const std::size_t stop = strict ? 1 : 0;
    for (std::size_t k = t.path.size(); k-- > stop;) {
        ++acc[t.path[k]];
        if (std::find(out.begin(), out.end(), acc) == out.end()) out.push_back(acc);
    }
    return out;
}

}  // namespace kronq
