// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/validate.hpp"

#include "kronq/boundary.hpp"
#include "kronq/errors.hpp"
#include "kronq/kronecker.hpp"
#include "kronq/semiinv.hpp"

#include <chrono>
#include <random>

namespace kronq {

const std::vector<std::string> kFixturePath01 = {"(0,1,3v)", "(1,1,3v)", "(2,0,3)", "(1,2,2)", "(1,1,2)",
                                                 "(1,0,2)",  "(0,1,1)",  "(1,1,2)", "(2,1,2)", "(0,1,3)"};
const std::vector<std::string> kFixturePath02 = {"(0,2,3v)", "(1,0,3)",  "(1,1,3)", "(2,1,2)", "(2,0,2)",
                                                 "(1,1,2v)", "(0,2,1)",  "(1,2,2)", "(1,1,3)", "(0,2,3)"};

bool ValidationReport::ok() const
{
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::size_t weight_dimension_mismatches(const Seed& bar, int l, int m)
{
    std::size_t bad = 0;
    for (const auto& v : boundary_frozen(l, m)) {
        const auto t = boundary_path(bar.quiver, l, m, v);
        const int col = boundary_column(v, l, m);
        const long long sign = col < 0 ? -1 : 1;
        for (const auto& u : bar.quiver.vertices) {
            auto it = t.dim.find(u);
            const long long d = it == t.dim.end() ? 0 : it->second;
            if (bar.weights.at(u)[WeightConfig::sigma_index(l, col)] != sign * d) ++bad;
        }
    }
    return bad;
}

ExchangeSweep sample_exchange_relations(int l, int m, int samples, std::uint64_t seed)
{
    const auto tilde = build_tilde(l, m).quiver;
    std::mt19937_64 rng(seed);
    ExchangeSweep out;
    for (int s = 0; s < samples;) {
        const auto rep = random_representation(l, m, rng);
        ExchangeReport r;
        try {
            r = check_exchange_relations(tilde, l, m, rep);
        } catch (const Error& e) {
            if (e.code() != Errc::DegenerateSample) throw;
            ++out.redraws;
            continue;
        }
        out.relations += r.checked;
        out.failures += r.failures.size();
        ++s;
    }
    return out;
}

namespace {

CheckResult check(std::string name, bool passed, std::string detail)
{
    return {std::move(name), passed, std::move(detail)};
}

std::vector<std::string> display_path(const PathModule& t, int l)
{
    std::vector<std::string> out;
    for (const auto& v : t.path) out.push_back(to_label(display_label(v, l)));
    return out;
}

CheckResult facet_support_check(const IceQuiver& bar, int l, int m, DiagonalOrientation diag)
{
    std::vector<PathModule> modules;
    std::vector<bool> strict;
    for (const auto& v : boundary_frozen(l, m)) {
        modules.push_back(boundary_path(bar, l, m, v));
        strict.push_back(true);
    }
    for (int n = 1; n <= m; ++n) {
        modules.push_back(diagonal_module(l, m, n, diag));
        strict.push_back(false);
    }
    std::size_t bad = 0;
    for (std::size_t k = 0; k < modules.size(); ++k) {
        int prev = 0;
        for (const auto& d : submodule_dims(modules[k], strict[k])) {
            int frozen = 0;
            int total = 0;
            for (const auto& [u, c] : d) {
                total += c;
                if (c > 0 && bar.is_frozen(u)) ++frozen;
            }
            if (frozen != 1 || total != prev + 1) ++bad;
            prev = total;
        }
    }
    return check("facet_support", bad == 0, std::to_string(bad) + " submodules off a unique frozen vertex or out of chain");
}

}  // namespace

ValidationReport validate(int l, int m, const ValidationOptions& opts)
{
    if (l < 2 || m < 2) throw Error(Errc::SizeTooSmall, "l and m must be at least 2");
    ValidationReport r;
    r.l = l;
    r.m = m;
    const bool full = opts.level == ValidationLevel::Full;

    const auto tilde = build_tilde(l, m);
    const auto bar = build_bar(l, m);
    const auto expected = expected_vertex_count(l, m);
    r.checks.push_back(check("vertex_count",
                             tilde.quiver.vertices.size() == expected && bar.quiver.vertices.size() == expected,
                             std::to_string(bar.quiver.vertices.size()) + " vertices, expected " + std::to_string(expected)));

    const auto dt = weight_defects(tilde.quiver, tilde.weights);
    const auto db = weight_defects(bar.quiver, bar.weights);
    r.checks.push_back(check("b_sigma_zero", dt.empty() && db.empty(),
                             std::to_string(dt.size() + db.size()) + " mutable vertices with B*sigma != 0"));

    const auto rt = b_rank(tilde.quiver);
    const auto rb = b_rank(bar.quiver);
    const auto nt = tilde.quiver.mutable_vertices().size();
    const auto nb = bar.quiver.mutable_vertices().size();
    r.checks.push_back(check("full_rank", rt == nt && rb == nb,
                             "rank " + std::to_string(rb) + " of " + std::to_string(nb) + " rows"));

    const int samples = opts.samples > 0 ? opts.samples : (full ? 100 : 20);
    const auto ex = sample_exchange_relations(l, m, samples, opts.seed);
    r.checks.push_back(check("exchange_relations", ex.failures == 0,
                             std::to_string(ex.relations) + " relations over " + std::to_string(samples) +
                                 " samples, " + std::to_string(ex.failures) + " failures"));

    const auto wd = weight_dimension_mismatches(bar, l, m);
    r.checks.push_back(check("weight_dimension", wd == 0, std::to_string(wd) + " mismatches"));

    if (l == 3 && m == 3) {
        const auto p1 = display_path(boundary_path(bar.quiver, 3, 3, VertexId::hive(3, 0, 1)), 3);
        const auto p2 = display_path(boundary_path(bar.quiver, 3, 3, VertexId::hive(3, 0, 2)), 3);
        r.checks.push_back(check("path_fixtures", p1 == kFixturePath01 && p2 == kFixturePath02,
                                 "two displayed boundary paths"));
    }

    r.checks.push_back(facet_support_check(bar.quiver, l, m, DiagonalOrientation::SocleAtDet));

    const auto t0 = std::chrono::steady_clock::now();
    const auto cone = cached_cone(l, m, DiagonalOrientation::SocleAtDet, opts.cache_dir);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool facets_ok = !(l == 3 && m == 3) || cone->facets.size() == 43;
    r.checks.push_back(check("facet_count", facets_ok,
                             std::to_string(cone->facets.size()) + " facets in " + std::to_string(secs) + " s"));

    if (full) {
        std::size_t triples = 0;
        std::size_t bad = 0;
        KroneckerOptions ko;
        ko.l = l;
        ko.m = m;
        ko.workers = opts.workers;
        ko.cache_dir = opts.cache_dir;
        for (int n = 1; n <= opts.oracle_max_n; ++n)
            for (const auto& mu : partitions_of(n, l))
                for (const auto& nu : partitions_of(n, l))
                    for (const auto& lam : partitions_of(n, m)) {
                        ++triples;
                        if (kronecker(mu, nu, lam, ko).value != kronecker_oracle(mu, nu, lam)) ++bad;
                    }
        r.checks.push_back(check("oracle_sweep", bad == 0,
                                 std::to_string(triples) + " triples up to n = " + std::to_string(opts.oracle_max_n) +
                                     ", " + std::to_string(bad) + " mismatches"));
    }
    return r;
}

Json report_to_json(const ValidationReport& r)
{
    Json j;
    j["l"] = std::to_string(r.l);
    j["m"] = std::to_string(r.m);
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace kronq
