// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/kronecker.hpp"

#include "kronq/errors.hpp"
#include "kronq/polyhedra.hpp"
#include "kronq/serialize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace kronq {

Partition::Partition(std::vector<int> parts)
{
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 0) throw Error(Errc::BadInput, "negative part in partition");
        if (k > 0 && parts[k] > parts[k - 1]) throw Error(Errc::BadInput, "partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error(Errc::BadInput, "bad partition '" + text + "'");
        }
        if (used != item.size()) throw Error(Errc::BadInput, "bad partition '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    for (int i = 0; i < parts_[0]; ++i)
        c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [i](int x) { return x > i; })));
    return Partition(std::move(c));
}

std::string Partition::str() const
{
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
    return s.empty() ? "0" : s;
}

namespace {

void partitions_rec(int n, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, max_length < 0 ? n + 1 : max_length, cur, out);
    return out;
}

std::vector<long long> sigma_of(const Partition& mu, const Partition& nu, int l)
{
    if (mu.size() != nu.size()) throw Error(Errc::SizeMismatch, "|mu| != |nu|");
    if (mu.length() > l || nu.length() > l) throw Error(Errc::LengthExceedsL, "partition longer than l");
    std::vector<long long> s(static_cast<std::size_t>(2 * l), 0);
    const Partition mu_t = mu.conjugate();
    const Partition nu_t = nu.conjugate();
    for (int part : mu_t.parts()) s[static_cast<std::size_t>(part - 1)] -= 1;
    for (int part : nu_t.parts()) s[static_cast<std::size_t>(l + part - 1)] += 1;
    return s;
}

std::vector<LambdaShift> lambda_shifts(const Partition& lambda, int m)
{
    if (lambda.length() > m) throw Error(Errc::LengthExceedsM, "lambda longer than m");
    std::vector<int> lam = lambda.parts();
    lam.resize(static_cast<std::size_t>(m), 0);
    std::vector<int> omega(static_cast<std::size_t>(m));
    std::iota(omega.begin(), omega.end(), 1);
    std::vector<LambdaShift> out;
    do {
        LambdaShift s;
        s.omega = omega;
        bool ok = true;
        for (int i = 1; i <= m; ++i) {
            const long long v = lam[i - 1] - i + omega[i - 1];
            ok = ok && v >= 0;
            s.shifted.push_back(v);
        }
        if (!ok) continue;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (omega[i] > omega[j]) s.sign = -s.sign;
        out.push_back(std::move(s));
    } while (std::next_permutation(omega.begin(), omega.end()));
    return out;
}

namespace {

using CountKey = std::tuple<int, int, int, std::vector<long long>>;

std::mutex count_mutex;
std::map<CountKey, mpz_class> count_memo;

}  // namespace

KroneckerResult kronecker(const Partition& mu, const Partition& nu, const Partition& lambda,
                          const KroneckerOptions& opts)
{
    if (mu.size() != nu.size() || mu.size() != lambda.size())
        throw Error(Errc::SizeMismatch, "partitions have different sizes");
    KroneckerResult res;
    res.l = opts.l.value_or(std::max({2, mu.length(), nu.length()}));
    res.m = opts.m.value_or(std::max(2, lambda.length()));
    if (res.l < 2 || res.m < 2) throw Error(Errc::SizeTooSmall, "l and m must be at least 2");

    const auto sigma = sigma_of(mu, nu, res.l);
    const auto shifts = lambda_shifts(lambda, res.m);
    const auto cone = cached_cone(res.l, res.m, opts.diagonal, opts.cache_dir);
    res.value = 0;
    for (const auto& s : shifts) {
        std::vector<long long> theta = sigma;
        theta.insert(theta.end(), s.shifted.begin(), s.shifted.end());
        CountKey key{res.l, res.m, static_cast<int>(opts.diagonal), theta};
        mpz_class cnt;
        bool hit = false;
        {
            std::lock_guard lock(count_mutex);
            auto it = count_memo.find(key);
            if (it != count_memo.end()) {
                cnt = it->second;
                hit = true;
            }
        }
        if (!hit) {
            CountOptions co;
            co.workers = opts.workers;
            cnt = count_lattice_points(*cone, theta, co);
            std::lock_guard lock(count_mutex);
            count_memo.emplace(std::move(key), cnt);
        }
        res.value += s.sign * cnt;
        res.terms.push_back({s, cnt});
    }
    return res;
}

namespace {

std::mutex chi_mutex;
std::map<std::pair<Partition, Partition>, long long> chi_memo;

long long chi(const Partition& lambda, const std::vector<int>& rho, std::size_t from)
{
    if (from == rho.size()) return lambda.size() == 0 ? 1 : 0;
    const Partition rest(std::vector<int>(rho.begin() + static_cast<long>(from), rho.end()));
    {
        std::lock_guard lock(chi_mutex);
        auto it = chi_memo.find({lambda, rest});
        if (it != chi_memo.end()) return it->second;
    }
    // Remove every border strip of length k via beta numbers.
    const int k = rho[from];
    const auto& p = lambda.parts();
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[i] = p[i] + len - 1 - i;
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        const int nb = beta[i] - k;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int sign = 1;
        for (int b : beta)
            if (b > nb && b < beta[i]) sign = -sign;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) parts.push_back(nbeta[j] - (len - 1 - j));
        total += sign * chi(Partition(parts), rho, from + 1);
    }
    std::lock_guard lock(chi_mutex);
    chi_memo.emplace(std::pair{lambda, rest}, total);
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size()) throw Error(Errc::SizeMismatch, "|lambda| != |rho|");
    return chi(lambda, rho.parts(), 0);
}

mpz_class centralizer_order(const Partition& rho)
{
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    mpz_class z = 1;
    for (const auto& [i, mi] : mult) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mi));
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(mi));
        z *= pw * f;
    }
    return z;
}

mpz_class kronecker_oracle(const Partition& mu, const Partition& nu, const Partition& lambda, int bound)
{
    if (mu.size() != nu.size() || mu.size() != lambda.size())
        throw Error(Errc::SizeMismatch, "partitions have different sizes");
    const int n = mu.size();
    if (n > bound) throw Error(Errc::SizeTooLargeForOracle, "n = " + std::to_string(n) + " exceeds the oracle bound");
    mpq_class s = 0;
    for (const auto& rho : partitions_of(n)) {
        const long long prod = mn_character(mu, rho) * mn_character(nu, rho) * mn_character(lambda, rho);
        s += mpq_class(mpz_class(static_cast<long>(prod)), centralizer_order(rho));
    }
    s.canonicalize();
    if (s.get_den() != 1) throw std::logic_error("character inner product is not an integer");
    return s.get_num();
}

}  // namespace kronq
