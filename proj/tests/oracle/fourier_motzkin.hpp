#pragma once

// Fourier-Motzkin elimination over exact rationals, used only as an
// independent reference for the simplex solver on small systems.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include <modulislope/lp.hpp>

namespace oracle {

using modulislope::Rational;

/// sum coeffs[j] x_j <= rhs. `origin` has one bit per input row combined into it.
struct Ineq {
    std::vector<Rational> coeffs;
    Rational rhs;
    std::uint64_t origin = 0;
};

/// Rows of p as <= inequalities, plus x >= 0.
inline std::vector<Ineq> normalize(const modulislope::lp::Program& p) {
    using modulislope::lp::Relation;
    std::vector<Ineq> out;
    for (const auto& row : p.rows) {
        std::vector<Rational> neg(row.coeffs.size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -row.coeffs[j];
        if (row.rel != Relation::GreaterEqual) out.push_back({row.coeffs, row.rhs});
        if (row.rel != Relation::LessEqual) out.push_back({neg, -row.rhs});
    }
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        std::vector<Rational> c(p.num_vars, Rational(0));
        c[j] = -1;
        out.push_back({c, 0});
    }
    for (std::size_t r = 0; r < out.size() && r < 64; ++r) out[r].origin = std::uint64_t{1} << r;
    return out;
}

/// Scales each row so its largest |coefficient| is 1 and drops rows 0 <= c
/// with c >= 0. Duplicates stay: merging them would break the history bound.
inline std::vector<Ineq> reduce(const std::vector<Ineq>& rows) {
    std::vector<Ineq> out;
    for (const auto& r : rows) {
        Rational scale = 0;
        for (const auto& c : r.coeffs) scale = std::max(scale, c < 0 ? Rational(-c) : c);
        if (scale == 0) {
            if (r.rhs < 0) return {r};  // keep the contradiction alone
            continue;
        }
        Ineq row{r.coeffs, r.rhs / scale, r.origin};
        for (auto& c : row.coeffs) c /= scale;
        out.push_back(std::move(row));
    }
    return out;
}

/// Removes variable k; the result no longer mentions it. `round` counts
/// earlier eliminations: a combination of more than round+2 input rows is
/// redundant (Chernikov) and is not generated.
inline std::vector<Ineq> eliminate(const std::vector<Ineq>& rows, std::size_t k, int round = -1) {
    std::vector<Ineq> pos, neg, out;
    for (const auto& r : rows) {
        if (r.coeffs[k] > 0)
            pos.push_back(r);
        else if (r.coeffs[k] < 0)
            neg.push_back(r);
        else
            out.push_back(r);
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            const std::uint64_t origin = p.origin | n.origin;
            if (round >= 0 && std::popcount(origin) > round + 2) continue;
            const Rational a = p.coeffs[k], b = -n.coeffs[k];
            Ineq c{std::vector<Rational>(p.coeffs.size()), b * p.rhs + a * n.rhs, origin};
            for (std::size_t j = 0; j < c.coeffs.size(); ++j) c.coeffs[j] = b * p.coeffs[j] + a * n.coeffs[j];
            c.coeffs[k] = 0;
            out.push_back(std::move(c));
        }
    return reduce(out);
}

/// Eliminates every variable in `vars`, cheapest (fewest new rows) first.
inline std::vector<Ineq> eliminate_all(std::vector<Ineq> rows, std::vector<std::size_t> vars) {
    const bool chernikov = rows.size() <= 64;
    for (int round = 0; !vars.empty(); ++round) {
        std::size_t best = 0, best_cost = SIZE_MAX;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            std::size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.coeffs[vars[v]] > 0) ++pos;
                if (r.coeffs[vars[v]] < 0) ++neg;
            }
            if (pos * neg < best_cost) {
                best_cost = pos * neg;
                best = v;
            }
        }
        rows = eliminate(rows, vars[best], chernikov ? round : -1);
        vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return rows;
}

inline std::vector<std::size_t> first_vars(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = j;
    return v;
}

inline bool feasible(const modulislope::lp::Program& p) {
    const auto rows = eliminate_all(normalize(p), first_vars(p.num_vars));
    for (const auto& r : rows)
        if (r.rhs < 0) return false;
    return true;
}

struct MaxResult {
    bool feasible = false;
    bool unbounded = false;
    Rational value;
};

/// max objective . x, via an extra variable z = objective . x eliminated last.
inline MaxResult maximum(const modulislope::lp::Program& p) {
    const std::size_t n = p.num_vars;
    auto rows = normalize(p);
    for (auto& r : rows) r.coeffs.push_back(0);
    std::vector<Rational> up(n + 1), down(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        up[j] = -p.objective[j];
        down[j] = p.objective[j];
    }
    up[n] = 1;
    down[n] = -1;
    rows.push_back({up, 0, rows.size() < 64 ? std::uint64_t{1} << rows.size() : 0});
    rows.push_back({down, 0, rows.size() < 64 ? std::uint64_t{1} << rows.size() : 0});
    rows = eliminate_all(std::move(rows), first_vars(n));

    MaxResult res;
    std::optional<Rational> hi, lo;
    for (const auto& r : rows) {
        const Rational& a = r.coeffs[n];
        if (a == 0) {
            if (r.rhs < 0) return res;
        } else if (a > 0) {
            const Rational v = r.rhs / a;
            if (!hi || v < *hi) hi = v;
        } else {
            const Rational v = r.rhs / a;
            if (!lo || v > *lo) lo = v;
        }
    }
    if (hi && lo && *lo > *hi) return res;
    res.feasible = true;
    if (!hi) {
        res.unbounded = true;
        return res;
    }
    res.value = *hi;
    return res;
}

}  // namespace oracle
