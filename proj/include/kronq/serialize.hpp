// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/diamond.hpp"
#include "kronq/polyhedra.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace kronq {

using Json = nlohmann::ordered_json;

// All integers are written as decimal strings.
Json seed_to_json(const Seed& seed, const std::string& stage);
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

std::uint64_t fnv1a(const std::string& bytes);

const char* diagonal_name(DiagonalOrientation d);
DiagonalOrientation parse_diagonal(const std::string& s);

// Cone file name inside the cache directory.
std::string cone_cache_name(int l, int m, DiagonalOrientation d);

// Cone for (l, m), memoized in process and, when a cache directory is known
// (argument, else the KRONQ_CACHE_DIR environment variable), on disk.
// Files whose content hash does not match are rebuilt.
std::shared_ptr<const Cone> cached_cone(int l, int m, DiagonalOrientation d,
                                        const std::optional<std::string>& cache_dir = std::nullopt);

}  // namespace kronq
