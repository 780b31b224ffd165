// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/boundary.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kronq {

class Partition {
public:
    Partition() = default;
    // Throws BadInput unless the parts are nonnegative and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);  // "3,2,1"; "" or "0" is empty

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    Partition conjugate() const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;  // trailing zeros removed
};

std::vector<Partition> partitions_of(int n, int max_length = -1);

// (σ(-1..-l), σ(1..l)).
std::vector<long long> sigma_of(const Partition& mu, const Partition& nu, int l);

struct LambdaShift {
    std::vector<int> omega;  // 1-based images ω(1..m)
    std::vector<long long> shifted;
    int sign = 1;
};

std::vector<LambdaShift> lambda_shifts(const Partition& lambda, int m);

struct KroneckerTerm {
    LambdaShift shift;
    mpz_class count;
};

struct KroneckerResult {
    mpz_class value;
    int l = 0;
    int m = 0;
    std::vector<KroneckerTerm> terms;
};

struct KroneckerOptions {
    std::optional<int> l;
    std::optional<int> m;
    unsigned workers = 1;
    DiagonalOrientation diagonal = DiagonalOrientation::SocleAtDet;
    std::optional<std::string> cache_dir;  // falls back to KRONQ_CACHE_DIR
};

KroneckerResult kronecker(const Partition& mu, const Partition& nu, const Partition& lambda,
                          const KroneckerOptions& opts = {});

// Character-theoretic value, independent of the cone machinery.
mpz_class kronecker_oracle(const Partition& mu, const Partition& nu, const Partition& lambda, int bound = 12);

long long mn_character(const Partition& lambda, const Partition& rho);

// z_ρ = prod i^{m_i} m_i!.
mpz_class centralizer_order(const Partition& rho);

}  // namespace kronq
