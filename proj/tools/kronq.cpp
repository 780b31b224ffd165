// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
//
// kronq: Kronecker coefficients by lattice-point counting.
//
// Exit codes: 0 ok, 1 usage or bad sizes, 2 mismatch or failed invariant,
// 3 unbounded fibre.

#include "kronq/errors.hpp"
#include "kronq/kronecker.hpp"
#include "kronq/serialize.hpp"
#include "kronq/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace kronq;

namespace {

int exit_code(Errc c)
{
    switch (c) {
    case Errc::BadInput:
    case Errc::SizeMismatch:
    case Errc::SizeTooSmall:
    case Errc::LengthExceedsL:
    case Errc::LengthExceedsM:
    case Errc::SizeTooLargeForOracle:
    case Errc::OutOfRange:
    case Errc::IndexOutOfRange:
    case Errc::NotBoundaryFrozen:
    case Errc::UnknownVertex:
        return 1;
    case Errc::UnboundedFibre:
        return 3;
    default:
        return 2;
    }
}

void write_output(const Json& j, const std::string& path)
{
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::BadInput, "cannot write " + path);
    out << text;
}

std::vector<long long> parse_ints(const std::string& text)
{
    std::vector<long long> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            v.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(Errc::BadInput, "bad integer list '" + text + "'");
    }
    return v;
}

void require_sizes(int l, int m)
{
    if (l < 2 || m < 2) throw Error(Errc::SizeTooSmall, "l and m must be at least 2");
}

Json partition_json(const Partition& p)
{
    Json a = Json::array();
    for (int x : p.parts()) a.push_back(std::to_string(x));
    return a;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kronecker coefficients from g-vector cones"};
    app.require_subcommand(1);

    std::string cache_dir;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--cache-dir", cache_dir, "Cone cache directory (default: $KRONQ_CACHE_DIR)");
    app.add_option("--workers", workers, "Worker threads for counting")->check(CLI::PositiveNumber);

    std::string mu_s, nu_s, lam_s;
    int l = 0, m = 0;
    bool verify = false, as_json = false;

    auto* coeff = app.add_subcommand("coeff", "Kronecker coefficient g(mu, nu, lambda)");
    coeff->add_option("--mu", mu_s)->required();
    coeff->add_option("--nu", nu_s)->required();
    coeff->add_option("--lam", lam_s)->required();
    coeff->add_option("--l", l, "Rank for mu and nu (default: longest of them, at least 2)");
    coeff->add_option("--m", m, "Rank for lambda (default: its length, at least 2)");
    coeff->add_flag("--verify", verify, "Check against the character formula");
    coeff->add_flag("--json", as_json, "Print the per-permutation breakdown as JSON");

    int bound = 12;
    auto* oracle = app.add_subcommand("oracle", "Kronecker coefficient from characters");
    oracle->add_option("--mu", mu_s)->required();
    oracle->add_option("--nu", nu_s)->required();
    oracle->add_option("--lam", lam_s)->required();
    oracle->add_option("--bound", bound, "Largest n accepted");

    std::string stage = "bar", out_path, diag_s = "socle-at-det";
    auto* build = app.add_subcommand("build-quiver", "Write a quiver with weights as JSON");
    build->add_option("--l", l)->required();
    build->add_option("--m", m)->required();
    build->add_option("--stage", stage)->check(CLI::IsMember({"tilde", "bar"}));
    build->add_option("--out", out_path);

    auto* cone_cmd = app.add_subcommand("cone", "Write the g-vector cone as JSON");
    cone_cmd->add_option("--l", l)->required();
    cone_cmd->add_option("--m", m)->required();
    cone_cmd->add_option("--out", out_path);
    cone_cmd->add_option("--diagonal", diag_s)->check(CLI::IsMember({"socle-at-det", "reversed"}));

    std::string theta_s;
    auto* count = app.add_subcommand("count", "Lattice points of one fibre");
    count->add_option("--l", l)->required();
    count->add_option("--m", m)->required();
    count->add_option("--theta", theta_s, "2l+m comma-separated integers")->required();
    count->add_option("--diagonal", diag_s)->check(CLI::IsMember({"socle-at-det", "reversed"}));

    std::string level_s = "quick";
    int max_n = 5;
    auto* val = app.add_subcommand("validate", "Run the invariant suites");
    val->add_option("--l", l)->required();
    val->add_option("--m", m)->required();
    val->add_option("--level", level_s)->check(CLI::IsMember({"quick", "full"}));
    val->add_option("--max-n", max_n, "Largest n of the oracle sweep (full level)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::optional<std::string> cache = cache_dir.empty() ? std::nullopt : std::optional(cache_dir);
    try {
        if (*coeff || *oracle) {
            const auto mu = Partition::parse(mu_s);
            const auto nu = Partition::parse(nu_s);
            const auto lam = Partition::parse(lam_s);
            if (*oracle) {
                std::cout << kronecker_oracle(mu, nu, lam, bound) << "\n";
                return 0;
            }
            KroneckerOptions ko;
            if (l) ko.l = l;
            if (m) ko.m = m;
            ko.workers = workers;
            ko.cache_dir = cache;
            const auto res = kronecker(mu, nu, lam, ko);
            std::optional<mpz_class> expect;
            if (verify) expect = kronecker_oracle(mu, nu, lam);
            if (as_json) {
                Json j;
                j["mu"] = partition_json(mu);
                j["nu"] = partition_json(nu);
                j["lam"] = partition_json(lam);
                j["l"] = std::to_string(res.l);
                j["m"] = std::to_string(res.m);
                j["value"] = res.value.get_str();
                Json terms = Json::array();
                for (const auto& t : res.terms) {
                    Json tj;
                    Json omega = Json::array();
                    for (int w : t.shift.omega) omega.push_back(std::to_string(w));
                    Json shifted = Json::array();
                    for (long long s : t.shift.shifted) shifted.push_back(std::to_string(s));
                    tj["omega"] = std::move(omega);
                    tj["lambda_shifted"] = std::move(shifted);
                    tj["sign"] = std::to_string(t.shift.sign);
                    tj["count"] = t.count.get_str();
                    terms.push_back(std::move(tj));
                }
                j["terms"] = std::move(terms);
                if (expect) j["oracle"] = expect->get_str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << res.value << "\n";
            }
            if (expect && *expect != res.value) {
                std::cerr << "mismatch: cone count " << res.value << ", characters " << *expect << "\n";
                return 2;
            }
            return 0;
        }
        if (*build) {
            require_sizes(l, m);
            Seed seed;
            if (stage == "tilde") {
                seed = build_tilde(l, m);
            } else {
                auto bar = build_bar(l, m);
                for (const auto& w : bar.warnings) std::cerr << "warning: " << w << "\n";
                seed = std::move(bar);
            }
            write_output(seed_to_json(seed, stage), out_path);
            return 0;
        }
        if (*cone_cmd) {
            require_sizes(l, m);
            write_output(cone_to_json(*cached_cone(l, m, parse_diagonal(diag_s), cache)), out_path);
            return 0;
        }
        if (*count) {
            require_sizes(l, m);
            const auto theta = parse_ints(theta_s);
            if (theta.size() != static_cast<std::size_t>(2 * l + m))
                throw Error(Errc::BadInput, "theta needs 2l+m = " + std::to_string(2 * l + m) + " entries");
            CountOptions co;
            co.workers = workers;
            std::cout << count_lattice_points(*cached_cone(l, m, parse_diagonal(diag_s), cache), theta, co) << "\n";
            return 0;
        }
        if (*val) {
            require_sizes(l, m);
            ValidationOptions vo;
            vo.level = level_s == "full" ? ValidationLevel::Full : ValidationLevel::Quick;
            vo.workers = workers;
            vo.oracle_max_n = max_n;
            vo.cache_dir = cache;
            const auto report = validate(l, m, vo);
            std::cout << report_to_json(report).dump(2) << "\n";
            return report.ok() ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "kronq: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return 1;
}
