// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/linalg.hpp"
#include "kronq/quiver.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace kronq {

// Integer representation of the flag-extended Kronecker quiver.  F[k] is the
// (k+1)xk ascending flag map, D[k] the kx(k+1) descending one (k = 1..l-1),
// A[n] the l x l central maps (n = 1..m).  Index 0 is unused.
struct Representation {
    int l = 0;
    int m = 0;
    std::vector<ZMatrix> F;
    std::vector<ZMatrix> D;
    std::vector<ZMatrix> A;

    // Matrix of the path from vertex -t through a_k to vertex s (shape s x t).
    ZMatrix path(int t, int k, int s) const;

    // Truncation flags and identity central maps.
    static Representation standard(int l, int m);
};

Representation random_representation(int l, int m, std::mt19937_64& rng, int lo = -5, int hi = 5);

// Block presentation of a semi-invariant.  Block (a, b) holds the index of
// the central map a_k its path runs through; absent blocks are zero.
struct Presentation {
    std::vector<int> sources;
    std::vector<int> targets;
    std::map<std::pair<int, int>, int> entries;

    // σ-part of the weight: sum of e_s over sources minus e_{-t} over targets.
    Weight sigma(int l, int m) const;
};

Presentation lifted_presentation(int i, int j, int n, bool dual, int l, int m);
Presentation vertex_presentation(const VertexId& v, int l, int m);

mpz_class eval_semi_invariant(const Presentation& p, const Representation& rep);

// λ-weight from the closed form, plain side only.
std::vector<long long> lambda_formula(int i, int j, int n, int l, int m);
// λ-weight read off by scaling each central map by 2.
std::vector<long long> lambda_probe(const Presentation& p, int l, int m, std::uint64_t seed = 7);

Weight sigma_lambda_weight(int i, int j, int n, bool dual, int l, int m);
Weight vertex_weight(const VertexId& v, int l, int m);

struct ExchangeReport {
    std::size_t checked = 0;
    std::vector<VertexId> failures;
};

// Exact divisibility of (in-product ± out-product) by the vertex value at
// every mutable vertex of the lifted quiver.  Signs of the lifts are not
// normalized, so either sign is accepted.
ExchangeReport check_exchange_relations(int l, int m, const Representation& rep);
ExchangeReport check_exchange_relations(const IceQuiver& tilde, int l, int m, const Representation& rep);

}  // namespace kronq
