// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kronq {

enum class ValidationLevel { Quick, Full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    int l = 0;
    int m = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

struct ValidationOptions {
    ValidationLevel level = ValidationLevel::Quick;
    unsigned workers = 1;
    int samples = 0;       // exchange-relation samples; 0 picks 20 (quick) or 100 (full)
    int oracle_max_n = 5;  // full level only
    std::uint64_t seed = 1;
    std::optional<std::string> cache_dir;
};

// The two displayed boundary paths of the 3x3 example, in display labels.
extern const std::vector<std::string> kFixturePath01;
extern const std::vector<std::string> kFixturePath02;

// Weight sigma_u(col) predicted by the boundary module of v: -dim for plain
// v, +dim for dual v.  Returns the number of mismatches over all u and v.
std::size_t weight_dimension_mismatches(const Seed& bar, int l, int m);

// Exchange relations on `samples` random representations.  Draws on which a
// semi-invariant vanishes are replaced; `redraws` counts them.
struct ExchangeSweep {
    std::size_t relations = 0;
    std::size_t failures = 0;
    std::size_t redraws = 0;
};
ExchangeSweep sample_exchange_relations(int l, int m, int samples, std::uint64_t seed);

ValidationReport validate(int l, int m, const ValidationOptions& opts = {});

Json report_to_json(const ValidationReport& r);

}  // namespace kronq
