// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/serialize.hpp"

#include "kronq/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

namespace kronq {

namespace {

std::string num(long long v)
{
    return std::to_string(v);
}

long long parse_num(const Json& j)
{
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw Error(Errc::BadInput, "bad integer '" + s + "'");
    return v;
}

Json int_row(const std::vector<long long>& row)
{
    Json a = Json::array();
    for (long long x : row) a.push_back(num(x));
    return a;
}

Json cone_payload(const Cone& c)
{
    Json j;
    j["l"] = num(c.l);
    j["m"] = num(c.m);
    j["chirality"] = "standard";
    j["diagonal"] = diagonal_name(c.diagonal);
    Json verts = Json::array();
    for (const auto& v : c.vertices) verts.push_back(to_label(v));
    j["vertices"] = std::move(verts);
    Json facets = Json::array();
    for (const auto& f : c.facets) facets.push_back(int_row(f));
    j["facets"] = std::move(facets);
    j["facet_origin"] = c.facet_origin;
    Json grading = Json::array();
    for (const auto& g : c.grading) grading.push_back(int_row(g));
    j["grading"] = std::move(grading);
    return j;
}

}  // namespace

const char* diagonal_name(DiagonalOrientation d)
{
    return d == DiagonalOrientation::SocleAtDet ? "socle-at-det" : "reversed";
}

DiagonalOrientation parse_diagonal(const std::string& s)
{
    if (s == "socle-at-det") return DiagonalOrientation::SocleAtDet;
    if (s == "reversed") return DiagonalOrientation::Reversed;
    throw Error(Errc::BadInput, "unknown diagonal orientation '" + s + "'");
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

Json seed_to_json(const Seed& seed, const std::string& stage)
{
    Json j;
    j["l"] = num(seed.l);
    j["m"] = num(seed.m);
    j["stage"] = stage;
    Json verts = Json::array();
    Json frozen = Json::array();
    for (const auto& v : seed.quiver.vertices) {
        verts.push_back(to_label(v));
        if (seed.quiver.is_frozen(v)) frozen.push_back(to_label(v));
    }
    j["vertices"] = std::move(verts);
    j["frozen"] = std::move(frozen);
    Json arrows = Json::array();
    for (const auto& [a, k] : seed.quiver.arrows) {
        // Arrows between frozen vertices are never read back.
        if (seed.quiver.is_frozen(a.first) && seed.quiver.is_frozen(a.second)) continue;
        arrows.push_back(Json::array({to_label(a.first), to_label(a.second), num(k)}));
    }
    j["arrows"] = std::move(arrows);
    Json weights = Json::object();
    for (const auto& v : seed.quiver.vertices) weights[to_label(v)] = int_row(seed.weights.at(v));
    j["weights"] = std::move(weights);
    return j;
}

Json cone_to_json(const Cone& c)
{
    Json j = cone_payload(c);
    std::ostringstream hex;
    hex << std::hex << fnv1a(j.dump());
    j["hash"] = hex.str();
    return j;
}

Cone cone_from_json(const Json& j)
{
    Cone c;
    try {
        c.l = static_cast<int>(parse_num(j.at("l")));
        c.m = static_cast<int>(parse_num(j.at("m")));
        c.diagonal = parse_diagonal(j.at("diagonal").get<std::string>());
        for (const auto& v : j.at("vertices")) c.vertices.push_back(parse_label(v.get<std::string>()));
        for (const auto& f : j.at("facets")) {
            std::vector<long long> row;
            for (const auto& x : f) row.push_back(parse_num(x));
            c.facets.push_back(std::move(row));
        }
        c.facet_origin = j.at("facet_origin").get<std::vector<std::string>>();
        for (const auto& g : j.at("grading")) {
            std::vector<long long> row;
            for (const auto& x : g) row.push_back(parse_num(x));
            c.grading.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadInput, std::string("malformed cone file: ") + e.what());
    }
    if (j.contains("hash")) {
        std::ostringstream hex;
        hex << std::hex << fnv1a(cone_payload(c).dump());
        if (hex.str() != j.at("hash").get<std::string>()) throw Error(Errc::BadInput, "cone file hash mismatch");
    }
    return c;
}

std::string cone_cache_name(int l, int m, DiagonalOrientation d)
{
    return "cone_l" + std::to_string(l) + "_m" + std::to_string(m) + "_standard_" + diagonal_name(d) + ".json";
}

namespace {

std::mutex cone_mutex;
std::map<std::tuple<int, int, int>, std::shared_ptr<const Cone>> cone_memo;

std::optional<Cone> load_cone(const std::filesystem::path& path, int l, int m, DiagonalOrientation d)
{
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (!j.contains("hash")) return std::nullopt;
        Cone c = cone_from_json(j);
        if (c.l != l || c.m != m || c.diagonal != d) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt file: rebuild
    }
}

void store_cone(const std::filesystem::path& dir, const std::filesystem::path& path, const Cone& c)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::random_device rd;
    const auto tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        if (!out) return;  // read-only cache: keep the in-memory copy only
        out << cone_to_json(c).dump() << "\n";
        if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::shared_ptr<const Cone> cached_cone(int l, int m, DiagonalOrientation d, const std::optional<std::string>& cache_dir)
{
    std::optional<std::filesystem::path> dir;
    if (cache_dir && !cache_dir->empty())
        dir = *cache_dir;
    else if (const char* env = std::getenv("KRONQ_CACHE_DIR"); env && *env)
        dir = env;

    const auto key = std::make_tuple(l, m, static_cast<int>(d));
    {
        std::lock_guard lock(cone_mutex);
        auto it = cone_memo.find(key);
        if (it != cone_memo.end()) {
            // Populate a directory that has not seen this cone yet.
            if (dir && !std::filesystem::exists(*dir / cone_cache_name(l, m, d)))
                store_cone(*dir, *dir / cone_cache_name(l, m, d), *it->second);
            return it->second;
        }
    }

    std::shared_ptr<const Cone> cone;
    if (dir) {
        const auto path = *dir / cone_cache_name(l, m, d);
        if (auto c = load_cone(path, l, m, d)) {
            cone = std::make_shared<const Cone>(std::move(*c));
        } else {
            cone = std::make_shared<const Cone>(build_cone(l, m, d));
            store_cone(*dir, path, *cone);
        }
    } else {
        cone = std::make_shared<const Cone>(build_cone(l, m, d));
    }
    std::lock_guard lock(cone_mutex);
    return cone_memo.emplace(key, cone).first->second;
}

}  // namespace kronq
