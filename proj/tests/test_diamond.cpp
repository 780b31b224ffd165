// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/boundary.hpp"
#include "kronq/diamond.hpp"
#include "kronq/semiinv.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace kronq;

namespace {

using VSet = std::set<VertexId>;

VSet in_nbrs(const IceQuiver& q, const VertexId& u)
{
    VSet s;
    for (const auto& [a, k] : q.arrows)
        if (a.second == u) s.insert(a.first);
    return s;
}

VSet out_nbrs(const IceQuiver& q, const VertexId& u)
{
    VSet s;
    for (const auto& [a, k] : q.arrows)
        if (a.first == u) s.insert(a.second);
    return s;
}

VertexId H(int i, int j, int n, bool dual = false)
{
    return VertexId::hive(n, i, j, dual);
}

}  // namespace

TEST_CASE("hive sizes")
{
    const auto h5 = hive({5});
    CHECK(h5.vertices.size() == 18);
    CHECK(h5.mutable_vertices().size() == 6);
    CHECK(h5.frozen.size() == 12);
    const auto h2 = hive({2});
    CHECK(h2.vertices.size() == 3);
    CHECK(h2.mutable_vertices().empty());
    CHECK(thrown([] { hive({1}); }) == Errc::SizeTooSmall);
}

TEST_CASE("hive exchange neighbourhood at (1,1)")
{
    for (auto o : {Orientation::Cw, Orientation::Ccw}) {
        const auto q = hive({3, o, 1});
        const VSet a = {H(1, 0, 1), H(2, 1, 1), H(0, 2, 1)};
        const VSet b = {H(1, 2, 1), H(0, 1, 1), H(2, 0, 1)};
        const auto in = in_nbrs(q, H(1, 1, 1));
        const auto out = out_nbrs(q, H(1, 1, 1));
        CHECK(((in == a && out == b) || (in == b && out == a)));
    }
}

TEST_CASE("canonical labels")
{
    CHECK(canonical_vertex(2, 1, 0, true, 3, 3) == H(1, 0, 2));
    CHECK(canonical_vertex(2, 0, 1, false, 3, 3) == H(0, 1, 1));
    CHECK(canonical_vertex(2, 0, 1, true, 3, 3) == H(0, 1, 1));
    CHECK(canonical_vertex(3, 2, 1, false, 3, 3) == H(2, 1, 2));
    CHECK(canonical_vertex(4, 0, 2, true, 3, 4) == H(0, 2, 3, true));
    CHECK(thrown([] { canonical_vertex(4, 1, 1, false, 3, 3); }) == Errc::OutOfRange);
    CHECK(thrown([] { canonical_vertex(2, 3, 0, false, 3, 3); }) == Errc::OutOfRange);
}

TEST_CASE("lifted quiver sizes")
{
    const auto s33 = build_tilde(3, 3);
    CHECK(s33.quiver.vertices.size() == 21);
    CHECK(s33.quiver.mutable_vertices().size() == 14);
    CHECK(s33.quiver.frozen.size() == 7);
    const auto s22 = build_tilde(2, 2);
    CHECK(s22.quiver.vertices.size() == 6);
    CHECK(s22.quiver.mutable_vertices().size() == 2);
    for (int l = 2; l <= 5; ++l)
        for (int m = 2; m <= 5; ++m) {
            const auto s = build_tilde(l, m);
            CHECK(s.quiver.vertices.size() == expected_vertex_count(l, m));
            // 2(l-1) boundary vertices plus m det vertices.
            CHECK(s.quiver.frozen.size() == static_cast<std::size_t>(2 * (l - 1) + m));
        }
    CHECK(thrown([] { build_tilde(1, 3); }) == Errc::SizeTooSmall);
    CHECK(thrown([] { build_tilde(3, 1); }) == Errc::SizeTooSmall);
}

TEST_CASE("diagonal vertex neighbourhoods in the lifted quiver")
{
    const int l = 4;
    const auto q = build_tilde(l, 4).quiver;
    for (int n = 2; n <= 4; ++n)
        for (int i = 2; i <= l - 2; ++i) {
            const VSet a = {H(i, 1, n), H(i, 1, n, true), H(i - 1, 0, n)};
            const VSet b = {H(i - 1, 1, n), H(i - 1, 1, n, true), H(i + 1, 0, n)};
            const auto in = in_nbrs(q, H(i, 0, n));
            const auto out = out_nbrs(q, H(i, 0, n));
            CAPTURE(n);
            CHECK(((in == a && out == b) || (in == b && out == a)));
        }
}

TEST_CASE("corner vertex (l-1,0,n) is adjacent to det n")
{
    for (int l = 2; l <= 4; ++l) {
        const auto q = build_tilde(l, 3).quiver;
        for (int n = 2; n <= 3; ++n) {
            const auto c = H(l - 1, 0, n);
            CHECK((q.arrow_count(c, VertexId::det(n)) + q.arrow_count(VertexId::det(n), c)) == 1);
        }
    }
}

TEST_CASE("twist sequences")
{
    CHECK(twist_sequence(3, 3, 2).empty());
    CHECK(thrown([] { twist_sequence(3, 3, 4); }) == Errc::UnsupportedDiamond);
    CHECK(thrown([] { twist_sequence(3, 4, 5); }) == Errc::UnsupportedDiamond);
    CHECK(full_twist(3, 2).empty());
    CHECK(full_twist(2, 5).empty());  // l = 2 diamonds have no interior

    for (int l = 2; l <= 5; ++l)
        for (int m = 2; m <= 5; ++m) {
            auto s = build_tilde(l, m);
            auto q = s.quiver;
            auto w = s.weights;
            for (const auto& u : full_twist(l, m)) {
                w = mutate_weights(q, w, u);
                q = mutate_quiver(q, u);
            }
            CAPTURE(l);
            CAPTURE(m);
            CHECK(same_up_to_frozen(q, bar_quiver(l, m)));
            CHECK(weight_defects(q, w).empty());
            for (const auto& f : q.frozen) CHECK(w.at(f) == s.weights.at(f));
        }
}

TEST_CASE("twisted seed")
{
    for (int l = 2; l <= 5; ++l)
        for (int m = 2; m <= 5; ++m) {
            const auto b = build_bar(l, m);
            CAPTURE(l);
            CAPTURE(m);
            CHECK(b.quiver.vertices.size() == expected_vertex_count(l, m));
            CHECK(weight_defects(b.quiver, b.weights).empty());
            CHECK(b_rank(b.quiver) == b.quiver.mutable_vertices().size());
            for (int n = 1; n <= m; ++n) {
                Weight d(b.weights.width(), 0);
                d[WeightConfig::sigma_index(l, l)] = 1;
                d[WeightConfig::sigma_index(l, -l)] = -1;
                d[WeightConfig::lambda_index(l, n)] = l;
                CHECK(b.weights.at(VertexId::det(n)) == d);
            }
            CHECK(b.r2_determined == b.warnings.empty());
        }
}

TEST_CASE("twisted weights match boundary dimensions at l = m = 3")
{
    const auto b = build_bar(3, 3);
    for (int j = 1; j <= 2; ++j) {
        const auto t = boundary_path(b.quiver, 3, 3, H(0, j, 3, true));
        for (const auto& u : b.quiver.vertices) {
            const int d = t.dim.count(u) ? t.dim.at(u) : 0;
            CHECK(b.weights.at(u)[WeightConfig::sigma_index(3, j)] == d);
        }
    }
}

TEST_CASE("arrow types cover every arrow")
{
    for (int l = 2; l <= 4; ++l)
        for (int m = 2; m <= 4; ++m) {
            const auto q = bar_quiver(l, m);
            const auto types = arrow_types(l, m);
            for (const auto& [a, k] : q.arrows) {
                if (q.is_frozen(a.first) && q.is_frozen(a.second)) continue;
                auto it = types.find(a);
                REQUIRE(it != types.end());
                CHECK(it->second != 0);
            }
        }
}

TEST_CASE("display labels")
{
    CHECK(display_label(H(1, 0, 3), 3) == H(2, 0, 3));
    CHECK(display_label(H(1, 0, 2), 3) == H(1, 0, 2));
    CHECK(from_display_label(H(1, 0, 3, true), 3) == H(2, 0, 3));
    for (int i = 1; i < 4; ++i) CHECK(from_display_label(display_label(H(i, 0, 3), 4), 4) == H(i, 0, 3));
}
