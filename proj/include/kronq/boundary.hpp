// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/quiver.hpp"

#include <map>
#include <vector>

namespace kronq {

using DimVector = std::map<VertexId, int>;

// Uniserial module of a path v_0 -> ... -> v_t; the socle sits at v_t.
struct PathModule {
    std::vector<VertexId> path;
    DimVector dim;

    static PathModule from_path(std::vector<VertexId> path);
    int total_dim() const;
};

enum class DiagonalOrientation { SocleAtDet, Reversed };

// Frozen hive vertices on the outer edge of diamond m, plain first.
std::vector<VertexId> boundary_frozen(int l, int m);

// Signed weight column tied to a boundary frozen vertex: -j for plain, +j for dual.
int boundary_column(const VertexId& v, int l, int m);

// Vertex sequence of the boundary path, without checking arrows.
std::vector<VertexId> boundary_path_vertices(int l, int m, const VertexId& v);

PathModule boundary_path(int l, int m, const VertexId& v);
PathModule boundary_path(const IceQuiver& bar, int l, int m, const VertexId& v);

PathModule diagonal_module(int l, int m, int n, DiagonalOrientation orientation = DiagonalOrientation::SocleAtDet);

// Dimension vectors of the suffixes v_k..v_t, k = t..1 (strict) or t..0,
// with duplicates removed.
std::vector<DimVector> submodule_dims(const PathModule& t, bool strict);

}  // namespace kronq
