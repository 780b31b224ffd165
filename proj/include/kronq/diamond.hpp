// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace kronq {

enum class Orientation { Ccw, Cw };

// Standard places the clockwise hives in the even diamonds; Mirrored is the
// globally reversed quiver and exists so tests can show it is rejected.
enum class Chirality { Standard, Mirrored };

struct HiveSpec {
    int l = 2;
    Orientation orientation = Orientation::Cw;
    int n = 1;
    bool dual = false;
};

IceQuiver hive(const HiveSpec& spec);

VertexId canonical_vertex(int n, int i, int j, bool dual, int l, int m);

struct Seed {
    int l = 0;
    int m = 0;
    IceQuiver quiver;
    WeightConfig weights;
};

// Number of vertices of the lifted (or twisted) quiver, det vertices included.
std::size_t expected_vertex_count(int l, int m);

Seed build_tilde(int l, int m, Chirality chirality = Chirality::Standard);

std::vector<VertexId> twist_sequence(int l, int m, int n_odd);
// Concatenation over all odd diamonds, in the order it is applied.
std::vector<VertexId> full_twist(int l, int m);

// Label of the vertex sitting at hive position (i, j) of diamond n in the
// twisted quiver, where every diamond is drawn in the even form.
VertexId position_vertex(int n, int i, int j, bool dual, int l, int m);

// Direct construction of the twisted quiver.
IceQuiver bar_quiver(int l, int m, Chirality chirality = Chirality::Standard);

struct BarSeed : Seed {
    bool r2_determined = false;
    std::vector<std::string> warnings;
};

BarSeed build_bar(int l, int m, Chirality chirality = Chirality::Standard);

enum ArrowType : unsigned { TypeA = 1, TypeB = 2, TypeC = 4 };

// Allowed types per arrow of bar_quiver.  Arrows along edge 1 are shared by
// a plain and a dual triangle and may be read as either B or C.
std::map<Arrow, unsigned> arrow_types(int l, int m, Chirality chirality = Chirality::Standard);

// Display labels used in the worked 3x3 example: odd diamonds number their
// diagonal from the other end.
VertexId display_label(const VertexId& v, int l);
VertexId from_display_label(const VertexId& v, int l);

}  // namespace kronq
