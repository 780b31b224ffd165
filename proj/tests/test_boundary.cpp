// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/boundary.hpp"
#include "kronq/diamond.hpp"
#include "kronq/validate.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kronq;

namespace {

std::vector<std::string> display(const PathModule& t, int l)
{
    std::vector<std::string> out;
    for (const auto& v : t.path) out.push_back(to_label(display_label(v, l)));
    return out;
}

VertexId H(int i, int j, int n, bool dual = false)
{
    return VertexId::hive(n, i, j, dual);
}

}  // namespace

TEST_CASE("3x3 boundary paths")
{
    const auto p1 = boundary_path(3, 3, H(0, 1, 3));
    CHECK(display(p1, 3) == kFixturePath01);
    CHECK(p1.dim.at(H(1, 1, 2)) == 2);
    for (const auto& [u, d] : p1.dim)
        if (u != H(1, 1, 2)) CHECK(d == 1);

    const auto p2 = boundary_path(3, 3, H(0, 2, 3));
    CHECK(display(p2, 3) == kFixturePath02);
    CHECK(p2.dim.at(H(1, 1, 3)) == 2);
    CHECK(p2.total_dim() == 10);
}

TEST_CASE("path endpoints")
{
    for (int l = 2; l <= 5; ++l)
        for (int m = 2; m <= 5; ++m) {
            const auto bar = bar_quiver(l, m);
            for (const auto& v : boundary_frozen(l, m)) {
                const auto t = boundary_path(bar, l, m, v);
                CHECK(t.path.back() == v);
                // Odd m starts at the opposite-side twin, even m at the transposed vertex.
                const VertexId start = m % 2 ? H(v.i, v.j, m, !v.dual) : H(v.j, v.i, m, v.dual);
                CAPTURE(to_label(v));
                CHECK(t.path.front() == start);
            }
        }
}

TEST_CASE("boundary frozen vertices")
{
    CHECK(boundary_frozen(3, 3) == std::vector<VertexId>{H(0, 1, 3), H(0, 2, 3), H(0, 1, 3, true), H(0, 2, 3, true)});
    CHECK(boundary_frozen(3, 2) == std::vector<VertexId>{H(2, 1, 2), H(1, 2, 2), H(2, 1, 2, true), H(1, 2, 2, true)});
    CHECK(boundary_column(H(0, 2, 3), 3, 3) == -2);
    CHECK(boundary_column(H(0, 2, 3, true), 3, 3) == 2);
    CHECK(thrown([] { boundary_path(3, 3, H(1, 1, 3)); }) == Errc::NotBoundaryFrozen);
    CHECK(thrown([] { boundary_path(3, 3, VertexId::det(3)); }) == Errc::NotBoundaryFrozen);
}

TEST_CASE("mirrored quiver does not carry the paths")
{
    const auto q = bar_quiver(3, 3, Chirality::Mirrored);
    CHECK(thrown([&] { boundary_path(q, 3, 3, H(0, 1, 3)); }) == Errc::ArrowMissing);
}

TEST_CASE("weight-dimension identity")
{
    for (int l = 2; l <= 4; ++l)
        for (int m = 2; m <= 4; ++m) CHECK(weight_dimension_mismatches(build_bar(l, m), l, m) == 0);
}

TEST_CASE("diagonal modules")
{
    const auto t1 = diagonal_module(3, 3, 1);
    CHECK(t1.path == std::vector<VertexId>{VertexId::det(1)});
    CHECK(submodule_dims(t1, false).size() == 1);
    for (int n = 2; n <= 3; ++n) {
        const auto t = diagonal_module(3, 3, n);
        CHECK(t.total_dim() == 3);
        CHECK(submodule_dims(t, false).size() == 3);
        CHECK(t.path.back() == VertexId::det(n));
    }
    for (int l = 2; l <= 5; ++l) {
        const auto bar = bar_quiver(l, 4);
        for (int n = 2; n <= 4; ++n) {
            const auto t = diagonal_module(l, 4, n);
            CHECK(t.total_dim() == l);
            for (std::size_t k = 0; k + 1 < t.path.size(); ++k) CHECK(bar.arrow_count(t.path[k], t.path[k + 1]) == 1);
        }
    }
    CHECK(thrown([] { diagonal_module(3, 3, 0); }) == Errc::IndexOutOfRange);
    CHECK(thrown([] { diagonal_module(3, 3, 4); }) == Errc::IndexOutOfRange);
}

TEST_CASE("submodule chains")
{
    const auto p = boundary_path(3, 3, H(0, 1, 3));
    const auto s = submodule_dims(p, true);
    CHECK(s.size() == 9);
    CHECK(s.front() == DimVector{{H(0, 1, 3), 1}});
    int prev = 0;
    for (const auto& d : s) {
        int total = 0;
        for (const auto& [u, c] : d) total += c;
        CHECK(total == prev + 1);
        prev = total;
    }
    CHECK(submodule_dims(p, false).size() == 10);

    // A path that returns to its start keeps dimension 2 there.
    for (const auto& v : boundary_frozen(4, 4))
        if (v.i == v.j) CHECK(boundary_path(4, 4, v).dim.at(v) == 2);
}
