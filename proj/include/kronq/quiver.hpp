// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kronq {

// A vertex of a glued hive quiver.  Hive vertices are addressed by the
// diamond index n, hive coordinates (i, j) and the plain/dual flag; det
// vertices only carry n.  Ordering is (kind, n, dual, i, j).
struct VertexId {
    enum class Kind : std::uint8_t { Hive = 0, Det = 1 };

    Kind kind = Kind::Hive;
    int n = 0;
    int i = 0;
    int j = 0;
    bool dual = false;

    static VertexId hive(int n, int i, int j, bool dual = false) { return {Kind::Hive, n, i, j, dual}; }
    static VertexId det(int n) { return {Kind::Det, n, 0, 0, false}; }

    bool is_det() const { return kind == Kind::Det; }

    friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b)
    {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.dual <=> b.dual; c != 0) return c;
        if (auto c = a.i <=> b.i; c != 0) return c;
        return a.j <=> b.j;
    }
    friend bool operator==(const VertexId& a, const VertexId& b) = default;
};

// "(i,j,n)" for plain, "(i,j,nv)" for dual, "detn" for det vertices.
std::string to_label(const VertexId& v);
VertexId parse_label(const std::string& s);

using Arrow = std::pair<VertexId, VertexId>;

struct IceQuiver {
    std::vector<VertexId> vertices;  // sorted, unique
    std::set<VertexId> frozen;
    std::map<Arrow, int> arrows;     // positive multiplicities only

    bool contains(const VertexId& v) const;
    bool is_frozen(const VertexId& v) const { return frozen.count(v) != 0; }
    int arrow_count(const VertexId& u, const VertexId& v) const;
    std::vector<VertexId> mutable_vertices() const;

    void add_vertex(const VertexId& v, bool is_frozen = false);
    void add_arrow(const VertexId& u, const VertexId& v, int mult = 1);
    // Cancels oriented 2-cycles and removes empty entries.
    void normalize();
    void drop_frozen_arrows();
    void reverse_arrows();
};

// Equality that ignores arrows between two frozen vertices.
bool same_up_to_frozen(const IceQuiver& a, const IceQuiver& b);

// Throws OutOfRange if an arrow multiplicity would overflow int.
IceQuiver mutate_quiver(const IceQuiver& q, const VertexId& u);

struct BMatrix {
    std::vector<VertexId> rows;  // mutable vertices
    std::vector<VertexId> cols;  // all vertices
    std::vector<std::vector<long long>> b;

    long long at(const VertexId& u, const VertexId& v) const;
};

BMatrix b_matrix(const IceQuiver& q);

using Weight = std::vector<long long>;

// Coordinates (σ(-1..-l), σ(1..l), λ(1..m)).
struct WeightConfig {
    int l = 0;
    int m = 0;
    std::map<VertexId, Weight> w;

    std::size_t width() const { return static_cast<std::size_t>(2 * l + m); }
    const Weight& at(const VertexId& v) const;
    static std::size_t sigma_index(int l, int k) { return k < 0 ? static_cast<std::size_t>(-k - 1) : static_cast<std::size_t>(l + k - 1); }
    static std::size_t lambda_index(int l, int k) { return static_cast<std::size_t>(2 * l + k - 1); }
};

// Mutable vertices whose in-sum and out-sum differ.
std::vector<VertexId> weight_defects(const IceQuiver& q, const WeightConfig& w);

WeightConfig mutate_weights(const IceQuiver& q, const WeightConfig& w, const VertexId& u, bool validate = true);

// Exact rank of the B-matrix.
std::size_t b_rank(const IceQuiver& q);

}  // namespace kronq
