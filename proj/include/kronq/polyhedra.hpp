// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/boundary.hpp"
#include "kronq/quiver.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kronq {

// g-vector cone {g : <g, d> >= 0 for every facet d} together with the
// grading map g -> sum_u g_u * weight(u).
struct Cone {
    int l = 0;
    int m = 0;
    DiagonalOrientation diagonal = DiagonalOrientation::SocleAtDet;
    std::vector<VertexId> vertices;
    std::vector<std::vector<long long>> facets;
    std::vector<std::string> facet_origin;     // module each facet came from
    std::vector<std::vector<long long>> grading;  // one row per vertex

    std::size_t dim() const { return vertices.size(); }
    std::size_t weight_width() const { return static_cast<std::size_t>(2 * l + m); }
};

Cone build_cone(int l, int m, DiagonalOrientation diagonal = DiagonalOrientation::SocleAtDet);

// True if dropping the facet strictly enlarges the cone.
bool facet_is_essential(const Cone& c, std::size_t facet);

struct Extent {
    enum class Status { Bounded, Unbounded, Infeasible };
    Status status = Status::Infeasible;
    std::optional<mpq_class> lo;  // nullopt: unbounded in that direction
    std::optional<mpq_class> hi;
};

// Exact range of g[coord] over the fibre of theta, with g[0..fixed.size())
// pinned to the given integers.
Extent lp_extent(const Cone& c, const std::vector<long long>& theta, std::size_t coord,
                 const std::vector<long long>& fixed = {});

struct CountStats {
    std::uint64_t nodes = 0;
    std::uint64_t lps = 0;
    std::size_t free_dims = 0;
};

struct CountOptions {
    unsigned workers = 1;
    CountStats* stats = nullptr;
};

// Integer points of the fibre polytope.  Throws UnboundedFibre when the
// fibre has a recession direction.
mpz_class count_lattice_points(const Cone& c, const std::vector<long long>& theta, const CountOptions& opts = {});

// Enumerates the lp_extent bounding box directly; for cross-checks only.
mpz_class count_lattice_points_naive(const Cone& c, const std::vector<long long>& theta,
                                     std::uint64_t max_box = 10'000'000);

}  // namespace kronq
