// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/polyhedra.hpp"

#include "kronq/diamond.hpp"
#include "kronq/errors.hpp"
#include "kronq/lp.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace kronq {

Cone build_cone(int l, int m, DiagonalOrientation diagonal)
{
    const BarSeed bar = build_bar(l, m);
    Cone c;
    c.l = l;
    c.m = m;
    c.diagonal = diagonal;
    c.vertices = bar.quiver.vertices;
    std::map<VertexId, std::size_t> index;
    for (std::size_t k = 0; k < c.vertices.size(); ++k) index[c.vertices[k]] = k;

    std::map<std::vector<long long>, std::size_t> seen;
    auto add = [&](const DimVector& dv, const std::string& origin) {
        std::vector<long long> f(c.vertices.size(), 0);
        long long g = 0;
        for (const auto& [v, k] : dv) {
            f[index.at(v)] = k;
            g = std::gcd(g, static_cast<long long>(k));
        }
        if (g > 1)
            for (auto& x : f) x /= g;
        if (seen.emplace(f, c.facets.size()).second) {
            c.facets.push_back(std::move(f));
            c.facet_origin.push_back(origin);
        }
    };
    for (const auto& v : boundary_frozen(l, m)) {
        const PathModule t = boundary_path(bar.quiver, l, m, v);
        for (const auto& dv : submodule_dims(t, true)) add(dv, "T" + to_label(v));
    }
    for (int n = 1; n <= m; ++n) {
        const PathModule t = diagonal_module(l, m, n, diagonal);
        for (const auto& dv : submodule_dims(t, false)) add(dv, "T_" + std::to_string(n));
    }
    for (const auto& v : c.vertices) c.grading.push_back(bar.weights.at(v));
    return c;
}

namespace {

mpz_class lcm_of_dens(const std::vector<mpq_class>& xs)
{
    mpz_class l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

// The fibre written in free coordinates y:  g = c0 + C y  and  A y >= beta.
struct Reduced {
    bool infeasible = false;
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::size_t> pivots;
    std::vector<mpq_class> c0;
    QMatrix cmat;  // n x d
    bool integral = true;
    std::vector<std::vector<mpz_class>> a;
    std::vector<mpz_class> beta;
};

// Gauss-Jordan on the equality system, preferring unit pivots so that the
// parametrization stays integral whenever possible.
Reduced reduce(const Cone& c, const std::vector<long long>& theta, const std::vector<long long>& fixed)
{
    const std::size_t n = c.dim();
    const std::size_t w = c.weight_width();
    if (theta.size() != w) throw Error(Errc::SizeMismatch, "theta has the wrong length");
    if (fixed.size() > n) throw Error(Errc::SizeMismatch, "too many fixed coordinates");

    QMatrix e;
    std::vector<mpq_class> rhs;
    for (std::size_t r = 0; r < w; ++r) {
        std::vector<mpq_class> row(n);
        for (std::size_t u = 0; u < n; ++u) row[u] = static_cast<long>(c.grading[u][r]);
        e.push_back(std::move(row));
        rhs.emplace_back(static_cast<long>(theta[r]));
    }
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        std::vector<mpq_class> row(n, 0);
        row[k] = 1;
        e.push_back(std::move(row));
        rhs.emplace_back(static_cast<long>(fixed[k]));
    }

    Reduced red;
    red.n = n;
    std::vector<bool> is_pivot(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivot_rows;  // (row, col)
    for (std::size_t r = 0; r < e.size(); ++r) {
        std::size_t best = n;
        for (std::size_t col = 0; col < n; ++col) {
            if (is_pivot[col] || sgn(e[r][col]) == 0) continue;
            if (best == n) best = col;
            const mpq_class ab = abs(e[r][col]);
            if (ab == 1) {
                best = col;
                break;
            }
            if (ab < abs(e[r][best])) best = col;
        }
        if (best == n) {
            if (sgn(rhs[r]) != 0) red.infeasible = true;
            continue;
        }
        const mpq_class inv = 1 / e[r][best];
        for (auto& x : e[r]) x *= inv;
        rhs[r] *= inv;
        for (std::size_t o = 0; o < e.size(); ++o) {
            if (o == r || sgn(e[o][best]) == 0) continue;
            const mpq_class f = e[o][best];
            for (std::size_t col = 0; col < n; ++col)
                if (sgn(e[r][col]) != 0) e[o][col] -= f * e[r][col];
            rhs[o] -= f * rhs[r];
        }
        is_pivot[best] = true;
        pivot_rows.emplace_back(r, best);
    }
    if (red.infeasible) return red;

    std::vector<std::size_t> free_cols;
    std::vector<std::size_t> free_index(n, 0);
    for (std::size_t col = 0; col < n; ++col)
        if (!is_pivot[col]) {
            free_index[col] = free_cols.size();
            free_cols.push_back(col);
        }
    red.d = free_cols.size();
    red.c0.assign(n, 0);
    red.cmat.assign(n, std::vector<mpq_class>(red.d, 0));
    for (std::size_t col : free_cols) red.cmat[col][free_index[col]] = 1;
    for (const auto& [r, col] : pivot_rows) {
        red.pivots.push_back(col);
        red.c0[col] = rhs[r];
        for (std::size_t f : free_cols) red.cmat[col][free_index[f]] = -e[r][f];
        if (rhs[r].get_den() != 1) red.integral = false;
        for (std::size_t f : free_cols)
            if (e[r][f].get_den() != 1) red.integral = false;
    }

    for (const auto& h : c.facets) {
        std::vector<mpq_class> row(red.d + 1, 0);  // last entry: beta
        for (std::size_t u = 0; u < n; ++u) {
            if (h[u] == 0) continue;
            const mpq_class hu(static_cast<long>(h[u]));
            for (std::size_t k = 0; k < red.d; ++k)
                if (sgn(red.cmat[u][k]) != 0) row[k] += hu * red.cmat[u][k];
            row[red.d] -= hu * red.c0[u];
        }
        const mpz_class scale = lcm_of_dens(row);
        std::vector<mpz_class> ai(red.d);
        bool zero = true;
        for (std::size_t k = 0; k < red.d; ++k) {
            mpq_class t = row[k] * scale;
            ai[k] = t.get_num();
            if (sgn(ai[k]) != 0) zero = false;
        }
        mpq_class bt = row[red.d] * scale;
        if (zero) {
            if (sgn(bt) > 0) {
                red.infeasible = true;
                return red;
            }
            continue;
        }
        red.a.push_back(std::move(ai));
        red.beta.push_back(bt.get_num());
    }
    return red;
}

// min/max of obj.y over A y >= beta with y free (split into y+ - y-).
struct FreeLp {
    Simplex lp;
    std::size_t d;
    FreeLp(const Reduced& red) : lp(build(red)), d(red.d) {}

    static Simplex build(const Reduced& red)
    {
        QMatrix a;
        std::vector<mpq_class> b;
        for (std::size_t r = 0; r < red.a.size(); ++r) {
            std::vector<mpq_class> row(2 * red.d);
            for (std::size_t k = 0; k < red.d; ++k) {
                row[k] = -red.a[r][k];
                row[red.d + k] = red.a[r][k];
            }
            a.push_back(std::move(row));
            b.emplace_back(-red.beta[r]);
        }
        if (a.empty()) {
            a.push_back(std::vector<mpq_class>(2 * red.d, 0));
            b.emplace_back(0);
        }
        return Simplex(a, b);
    }

    std::optional<mpq_class> max(const std::vector<mpq_class>& obj) const
    {
        std::vector<mpq_class> c(2 * d);
        for (std::size_t k = 0; k < d; ++k) {
            c[k] = obj[k];
            c[d + k] = -obj[k];
        }
        LpResult r = lp.maximize(c);
        if (r.status != LpStatus::Optimal) return std::nullopt;
        return r.value;
    }
};

mpz_class ceil_q(const mpq_class& q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class floor_q(const mpq_class& q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

class Counter {
public:
    Counter(const Reduced& red, std::vector<std::size_t> order, std::vector<mpz_class> lo, std::vector<mpz_class> hi)
        : red_(red), order_(std::move(order)), lo_(std::move(lo)), hi_(std::move(hi))
    {
    }

    // Counts the subtree below the given values of order_[0..prefix.size()).
    mpz_class count(std::vector<mpz_class>& prefix)
    {
        const std::size_t k = prefix.size();
        const std::size_t d = red_.d;

        // rhs_r = beta_r - sum_fixed a_r v - sum_rest a_r lo; constraint a_rest z >= rhs_r.
        std::vector<mpz_class> rhs(red_.a.size());
        std::vector<std::size_t> live;
        for (std::size_t r = 0; r < red_.a.size(); ++r) {
            mpz_class s = red_.beta[r];
            for (std::size_t t = 0; t < k; ++t) s -= red_.a[r][order_[t]] * prefix[t];
            bool any = false;
            for (std::size_t t = k; t < d; ++t) {
                const mpz_class& ar = red_.a[r][order_[t]];
                if (sgn(ar) == 0) continue;
                any = true;
                s -= ar * lo_[order_[t]];
            }
            if (!any) {
                if (sgn(s) > 0) return 0;
                continue;
            }
            rhs[r] = std::move(s);
            live.push_back(r);
        }
        // A full prefix can come from the work split, so the rows above
        // are its only feasibility check.
        if (k == d) return leaf(prefix) ? 1 : 0;
        ++stats.nodes;

        const std::size_t var = order_[k];
        mpz_class zlo, zhi;
        if (k + 1 == d) {
            zlo = 0;
            bool has_hi = false;
            for (std::size_t r : live) {
                const mpz_class& ar = red_.a[r][var];
                mpz_class q;
                if (sgn(ar) > 0) {
                    mpz_cdiv_q(q.get_mpz_t(), rhs[r].get_mpz_t(), ar.get_mpz_t());
                    if (q > zlo) zlo = q;
                } else {
                    mpz_fdiv_q(q.get_mpz_t(), rhs[r].get_mpz_t(), ar.get_mpz_t());
                    if (!has_hi || q < zhi) zhi = q;
                    has_hi = true;
                }
            }
            if (!has_hi) zhi = hi_[var] - lo_[var];
            if (zlo > zhi) return 0;
            if (red_.integral) return zhi - zlo + 1;
        } else {
            QMatrix a;
            std::vector<mpq_class> b;
            const std::size_t rem = d - k;
            for (std::size_t r : live) {
                std::vector<mpq_class> row(rem);
                for (std::size_t t = 0; t < rem; ++t) row[t] = -red_.a[r][order_[k + t]];
                a.push_back(std::move(row));
                b.emplace_back(-rhs[r]);
            }
            if (a.empty()) {
                zlo = 0;
                zhi = hi_[var] - lo_[var];
            } else {
                Simplex lp(a, b);
                ++stats.lps;
                if (!lp.feasible()) return 0;
                std::vector<mpq_class> obj(rem, 0);
                obj[0] = 1;
                LpResult up = lp.maximize(obj);
                obj[0] = -1;
                LpResult down = lp.maximize(obj);
                if (up.status != LpStatus::Optimal || down.status != LpStatus::Optimal)
                    throw Error(Errc::UnboundedFibre, "fibre is unbounded");
                zhi = floor_q(up.value);
                zlo = ceil_q(-down.value);
                if (zlo < 0) zlo = 0;
            }
            if (zlo > zhi) return 0;
        }

        mpz_class total = 0;
        for (mpz_class z = zlo; z <= zhi; ++z) {
            prefix.push_back(z + lo_[var]);
            total += count(prefix);
            prefix.pop_back();
        }
        return total;
    }

    // Ranges of the first free coordinate, used to split work.
    const std::vector<std::size_t>& order() const { return order_; }

    CountStats stats;

private:
    const Reduced& red_;
    std::vector<std::size_t> order_;
    std::vector<mpz_class> lo_;
    std::vector<mpz_class> hi_;

    bool leaf(const std::vector<mpz_class>& prefix) const
    {
        if (red_.integral) return true;
        std::vector<mpz_class> y(red_.d);
        for (std::size_t t = 0; t < red_.d; ++t) y[order_[t]] = prefix[t];
        for (std::size_t p : red_.pivots) {
            mpq_class g = red_.c0[p];
            for (std::size_t k = 0; k < red_.d; ++k)
                if (sgn(red_.cmat[p][k]) != 0) g += red_.cmat[p][k] * mpq_class(y[k]);
            if (g.get_den() != 1) return false;
        }
        return true;
    }
};

}  // namespace

bool facet_is_essential(const Cone& c, std::size_t facet)
{
    if (facet >= c.facets.size()) throw Error(Errc::IndexOutOfRange, "facet index out of range");
    // Is there a g (split as g+ - g-) with every other facet >= 0 and this one <= -1?
    const std::size_t n = c.dim();
    QMatrix a;
    std::vector<mpq_class> b;
    for (std::size_t f = 0; f < c.facets.size(); ++f) {
        std::vector<mpq_class> row(2 * n);
        const long sign = f == facet ? 1 : -1;
        for (std::size_t u = 0; u < n; ++u) {
            row[u] = sign * static_cast<long>(c.facets[f][u]);
            row[n + u] = -sign * static_cast<long>(c.facets[f][u]);
        }
        a.push_back(std::move(row));
        b.emplace_back(f == facet ? -1 : 0);
    }
    Simplex lp(a, b);
    return lp.feasible();
}

Extent lp_extent(const Cone& c, const std::vector<long long>& theta, std::size_t coord,
                 const std::vector<long long>& fixed)
{
    if (coord >= c.dim()) throw Error(Errc::IndexOutOfRange, "coordinate out of range");
    Extent ex;
    const Reduced red = reduce(c, theta, fixed);
    if (red.infeasible) return ex;
    FreeLp lp(red);
    if (!lp.lp.feasible()) return ex;
    std::vector<mpq_class> obj = red.cmat[coord];
    auto hi = lp.max(obj);
    for (auto& x : obj) x = -x;
    auto lo = lp.max(obj);
    if (hi) ex.hi = red.c0[coord] + *hi;
    if (lo) ex.lo = red.c0[coord] - *lo;
    ex.status = hi && lo ? Extent::Status::Bounded : Extent::Status::Unbounded;
    return ex;
}

mpz_class count_lattice_points(const Cone& c, const std::vector<long long>& theta, const CountOptions& opts)
{
    const Reduced red = reduce(c, theta, {});
    if (red.infeasible) return 0;
    if (opts.stats) opts.stats->free_dims = red.d;
    if (red.d == 0) {
        std::vector<mpz_class> none;
        return Counter(red, {}, {}, {}).count(none);
    }

    FreeLp root(red);
    if (!root.lp.feasible()) return 0;
    std::vector<mpz_class> lo(red.d), hi(red.d);
    std::vector<std::pair<mpz_class, std::size_t>> widths;
    for (std::size_t k = 0; k < red.d; ++k) {
        std::vector<mpq_class> obj(red.d, 0);
        obj[k] = 1;
        auto up = root.max(obj);
        obj[k] = -1;
        auto down = root.max(obj);
        if (!up || !down) throw Error(Errc::UnboundedFibre, "fibre polytope is unbounded");
        hi[k] = floor_q(*up);
        lo[k] = ceil_q(-*down);
        if (lo[k] > hi[k]) return 0;
        widths.emplace_back(hi[k] - lo[k], k);
    }
    // Most constrained coordinates first.
    std::sort(widths.begin(), widths.end());
    std::vector<std::size_t> order;
    for (const auto& wk : widths) order.push_back(wk.second);

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        Counter counter(red, order, lo, hi);
        std::vector<mpz_class> prefix;
        mpz_class total = counter.count(prefix);
        if (opts.stats) {
            opts.stats->nodes += counter.stats.nodes;
            opts.stats->lps += counter.stats.lps + 1;
        }
        return total;
    }

    // Split on the first one or two coordinates; each task owns its LP state.
    std::vector<std::vector<mpz_class>> tasks;
    const std::size_t v0 = order[0];
    for (mpz_class x = lo[v0]; x <= hi[v0]; ++x) tasks.push_back({x});
    if (tasks.size() < 4 * workers && red.d >= 2) {
        std::vector<std::vector<mpz_class>> deeper;
        const std::size_t v1 = order[1];
        for (const auto& t : tasks)
            for (mpz_class x = lo[v1]; x <= hi[v1]; ++x) deeper.push_back({t[0], x});
        tasks = std::move(deeper);
    }

    std::vector<mpz_class> partial(tasks.size());
    std::vector<CountStats> wstats(workers);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                Counter counter(red, order, lo, hi);
                for (std::size_t t = next++; t < tasks.size(); t = next++) {
                    std::vector<mpz_class> prefix = tasks[t];
                    partial[t] = counter.count(prefix);
                }
                wstats[w] = counter.stats;
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    mpz_class total = 0;
    for (const auto& p : partial) total += p;
    if (opts.stats)
        for (const auto& s : wstats) {
            opts.stats->nodes += s.nodes;
            opts.stats->lps += s.lps;
        }
    return total;
}

mpz_class count_lattice_points_naive(const Cone& c, const std::vector<long long>& theta, std::uint64_t max_box)
{
    const std::size_t n = c.dim();
    std::vector<long long> lo(n), hi(n);
    mpz_class box = 1;
    for (std::size_t u = 0; u < n; ++u) {
        const Extent ex = lp_extent(c, theta, u);
        if (ex.status == Extent::Status::Infeasible) return 0;
        if (ex.status == Extent::Status::Unbounded) throw Error(Errc::UnboundedFibre, "fibre polytope is unbounded");
        lo[u] = ceil_q(*ex.lo).get_si();
        hi[u] = floor_q(*ex.hi).get_si();
        if (lo[u] > hi[u]) return 0;
        box *= static_cast<long>(hi[u] - lo[u] + 1);
    }
    if (box > max_box) throw Error(Errc::BadInput, "bounding box too large for naive enumeration");

    std::vector<long long> g = lo;
    mpz_class total = 0;
    const std::size_t w = c.weight_width();
    for (;;) {
        bool ok = true;
        for (std::size_t r = 0; r < w && ok; ++r) {
            long long s = 0;
            for (std::size_t u = 0; u < n; ++u) s += c.grading[u][r] * g[u];
            ok = s == theta[r];
        }
        for (std::size_t f = 0; f < c.facets.size() && ok; ++f) {
            long long s = 0;
            for (std::size_t u = 0; u < n; ++u) s += c.facets[f][u] * g[u];
            ok = s >= 0;
        }
        if (ok) ++total;
        std::size_t u = 0;
        while (u < n && g[u] == hi[u]) {
            g[u] = lo[u];
            ++u;
        }
        if (u == n) break;
        ++g[u];
    }
    return total;
}

}  // namespace kronq
