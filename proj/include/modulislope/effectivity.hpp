#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bounds.hpp"
#include "catalog.hpp"
#include "lp.hpp"
#include "picard.hpp"
#include "testcurves.hpp"

namespace modulislope {

struct EffectivityCertificate {
    enum class Kind { Combination, Farkas, UnboundedSymbol };

    Kind kind = Kind::Farkas;
    ModuliSpace space;
    /// Combination: generator id -> multiplier, free boundary multipliers, and target − Σ x_k G_k.
    std::map<std::string, Rational> combination;
    std::map<Generator, Rational> free_boundary;
    std::optional<DivisorClass> residual;
    /// Farkas: y with y(G_k) <= 0, y(δ) <= 0 on free boundary, y(target) > 0.
    std::map<Generator, Rational> farkas;
    /// UnboundedSymbol: the symbol whose adverse direction is unbounded.
    std::string symbol;
    std::size_t rows = 0;

    bool feasible() const { return kind == Kind::Combination; }
};

inline const char* kind_name(EffectivityCertificate::Kind k) {
    switch (k) {
        case EffectivityCertificate::Kind::Combination:
            return "combination";
        case EffectivityCertificate::Kind::Farkas:
            return "farkas";
        case EffectivityCertificate::Kind::UnboundedSymbol:
            return "unbounded-symbol";
    }
    return "?";
}

namespace detail {

struct Resolution {
    std::optional<Rational> value;
    std::string blocking_symbol;
};

/// Worst-case constant for one coefficient: its minimum when it sits on the
/// target side, its maximum on the generator side.
inline Resolution resolve(const LinExpr& e, const BoundEnv& env, bool want_min) {
    if (e.is_constant()) return {e.constant(), {}};
    const Interval iv = range(e, env);
    const auto& v = want_min ? iv.lo : iv.hi;
    if (v) return {*v, {}};
    return {std::nullopt, *unbounded_adverse_symbol(e, env, want_min)};
}

inline BoundEnv merged_env(const std::vector<NamedClass>& generators, const BoundEnv& env) {
    BoundEnv all;
    for (const auto& g : generators) all.merge(g.bounds);
    all.merge(env);
    return all;
}

inline std::set<Generator> support(const DivisorClass& target, const std::vector<NamedClass>& generators) {
    std::set<Generator> coords;
    for (const auto& [gen, c] : target.coefficients()) coords.insert(gen);
    for (const auto& g : generators)
        for (const auto& [gen, c] : g.cls.coefficients()) coords.insert(gen);
    return coords;
}

}  // namespace detail

/// Is `target` a nonnegative combination of `generators` (plus nonnegative
/// boundary classes when `allow_free_boundary`)? Symbols are resolved to the
/// endpoint that makes the question hardest, so a combination found here is
/// valid for every admissible value.
inline EffectivityCertificate decompose(const DivisorClass& target, const std::vector<NamedClass>& generators,
                                       bool allow_free_boundary, const BoundEnv& env = {}) {
    for (const auto& g : generators)
        if (g.cls.space() != target.space())
            throw SpaceMismatch("generator '" + g.id + "' lives on " + g.cls.space().str() + ", target on " +
                                target.space().str());
    const BoundEnv all_env = detail::merged_env(generators, env);
    const std::size_t k = generators.size();

    EffectivityCertificate cert;
    cert.space = target.space();

    using RowKey = std::tuple<int, std::vector<Rational>, Rational>;
    std::map<RowKey, Generator> rows;
    for (const Generator& coord : detail::support(target, generators)) {
        const bool inequality = allow_free_boundary && coord.kind == Generator::Kind::Boundary;
        std::vector<Rational> coeffs(k);
        for (std::size_t j = 0; j < k; ++j) {
            const LinExpr c = generators[j].cls.coeff(coord);
            if (!inequality && !c.is_constant())
                throw std::invalid_argument("symbolic coefficient of " + generator_name(coord, target.space()) +
                                            " in generator '" + generators[j].id + "' needs --free-boundary");
            const auto r = detail::resolve(c, all_env, false);
            if (!r.value) {
                cert.kind = EffectivityCertificate::Kind::UnboundedSymbol;
                cert.symbol = r.blocking_symbol;
                return cert;
            }
            coeffs[j] = *r.value;
        }
        const LinExpr t = target.coeff(coord);
        if (!inequality && !t.is_constant())
            throw std::invalid_argument("symbolic target coefficient of " + generator_name(coord, target.space()) +
                                        " needs --free-boundary");
        const auto r = detail::resolve(t, all_env, true);
        if (!r.value) {
            cert.kind = EffectivityCertificate::Kind::UnboundedSymbol;
            cert.symbol = r.blocking_symbol;
            return cert;
        }
        rows.emplace(RowKey{inequality ? 1 : 0, std::move(coeffs), *r.value}, coord);
    }

    lp::Program prog;
    prog.num_vars = k;
    std::vector<Generator> row_coord;
    for (const auto& [key, coord] : rows) {
        const auto& [ineq, coeffs, rhs] = key;
        prog.rows.push_back({coeffs, ineq ? lp::Relation::LessEqual : lp::Relation::Equal, rhs});
        row_coord.push_back(coord);
    }
    cert.rows = prog.rows.size();
    const lp::Solution sol = lp::solve(prog);

    if (sol.status == lp::Status::Infeasible) {
        cert.kind = EffectivityCertificate::Kind::Farkas;
        for (std::size_t i = 0; i < sol.dual.size(); ++i)
            if (sol.dual[i] != 0) cert.farkas[row_coord[i]] = -sol.dual[i];
        return cert;
    }
    cert.kind = EffectivityCertificate::Kind::Combination;
    DivisorClass residual = target;
    for (std::size_t j = 0; j < k; ++j) {
        cert.combination[generators[j].id.empty() ? "g" + std::to_string(j + 1) : generators[j].id] = sol.x[j];
        residual -= sol.x[j] * generators[j].cls;
    }
    if (allow_free_boundary)
        for (const auto& [gen, c] : residual.coefficients())
            if (gen.kind == Generator::Kind::Boundary) {
                const auto lo = worst_case_min(c, all_env);
                if (lo && *lo > 0) cert.free_boundary[gen] = *lo;
            }
    cert.residual = residual;
    return cert;
}

/// Re-checks a certificate from scratch against the problem data.
inline bool verify_certificate(const EffectivityCertificate& cert, const DivisorClass& target,
                               const std::vector<NamedClass>& generators, bool allow_free_boundary,
                               const BoundEnv& env = {}) {
    const BoundEnv all_env = detail::merged_env(generators, env);
    if (cert.kind == EffectivityCertificate::Kind::UnboundedSymbol) return !cert.symbol.empty();
    if (cert.kind == EffectivityCertificate::Kind::Combination) {
        DivisorClass residual = target;
        for (std::size_t j = 0; j < generators.size(); ++j) {
            const std::string id = generators[j].id.empty() ? "g" + std::to_string(j + 1) : generators[j].id;
            const auto it = cert.combination.find(id);
            if (it == cert.combination.end() || it->second < 0) return false;
            residual -= it->second * generators[j].cls;
        }
        for (const auto& [gen, c] : residual.coefficients()) {
            if (allow_free_boundary && gen.kind == Generator::Kind::Boundary) {
                if (!nonnegative(c, all_env)) return false;
            } else if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }
    // Farkas: evaluate the functional on the worst-case resolved data.
    Rational on_target = 0;
    for (const auto& [coord, y] : cert.farkas) {
        const bool inequality = allow_free_boundary && coord.kind == Generator::Kind::Boundary;
        if (inequality && y > 0) return false;
        const auto t = detail::resolve(target.coeff(coord), all_env, true);
        if (!t.value) return false;
        on_target += y * *t.value;
    }
    if (on_target <= 0) return false;
    for (const auto& g : generators) {
        Rational v = 0;
        for (const auto& [coord, y] : cert.farkas) {
            const auto r = detail::resolve(g.cls.coeff(coord), all_env, false);
            if (!r.value) return false;
            v += y * *r.value;
        }
        if (v > 0) return false;
    }
    return true;
}

struct CombinationSolve {
    enum class Status { Unique, Underdetermined, Inconsistent };

    Status status = Status::Inconsistent;
    /// Generator ids and target symbols -> value (Unique only).
    std::map<std::string, Rational> values;
    std::vector<std::string> unknowns;
    std::size_t rank = 0;
};

inline const char* status_name(CombinationSolve::Status s) {
    switch (s) {
        case CombinationSolve::Status::Unique:
            return "unique";
        case CombinationSolve::Status::Underdetermined:
            return "underdetermined";
        case CombinationSolve::Status::Inconsistent:
            return "inconsistent";
    }
    return "?";
}

/// Solves target = Σ x_k G_k coefficientwise for the multipliers x_k and the
/// listed target symbols, by exact Gaussian elimination. Generators must be numeric.
inline CombinationSolve solve_combination(const DivisorClass& target, const std::vector<NamedClass>& generators,
                                          const std::vector<std::string>& target_symbols) {
    for (const auto& g : generators) {
        if (g.cls.space() != target.space()) throw SpaceMismatch("generator '" + g.id + "' on a different space");
        if (!g.cls.is_numeric()) throw std::invalid_argument("generator '" + g.id + "' has symbolic coefficients");
    }
    const std::set<std::string> listed(target_symbols.begin(), target_symbols.end());
    for (const auto& s : target.symbols())
        if (!listed.count(s)) throw std::invalid_argument("target symbol '" + s + "' is not listed as unknown");

    CombinationSolve out;
    for (const auto& g : generators) out.unknowns.push_back(g.id);
    for (const auto& s : target_symbols) out.unknowns.push_back(s);
    const std::size_t cols = out.unknowns.size();

    std::vector<std::vector<Rational>> m;
    for (const Generator& coord : detail::support(target, generators)) {
        std::vector<Rational> row(cols + 1, Rational(0));
        for (std::size_t j = 0; j < generators.size(); ++j) row[j] = generators[j].cls.coeff(coord).constant();
        const LinExpr t = target.coeff(coord);
        for (std::size_t s = 0; s < target_symbols.size(); ++s)
            row[generators.size() + s] = -t.coefficient(target_symbols[s]);
        row[cols] = t.constant();
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational piv = m[r][c];
        for (auto& v : m[r]) v /= piv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    out.rank = r;
    for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][cols] != 0) {
            out.status = CombinationSolve::Status::Inconsistent;
            return out;
        }
    if (r < cols) {
        out.status = CombinationSolve::Status::Underdetermined;
        return out;
    }
    out.status = CombinationSolve::Status::Unique;
    for (std::size_t i = 0; i < r; ++i) out.values[out.unknowns[pivot_col[i]]] = m[i][cols];
    return out;
}

struct M10_9Report {
    Rational r_dot_k, t_dot_k, r_dot_kn, t_dot_kn, r_dot_irr, t_dot_irr;
    lp::Program system;
    lp::Solution solution;
    bool certificate_verified = false;

    bool infeasible() const { return solution.status == lp::Status::Infeasible && certificate_verified; }
};

/// Variables (m, n) >= 0. If K = m·𝔎_9 + n·δ_irr + E with E met nonnegatively
/// by R and T, then m(C·𝔎_9) + n(C·δ_irr) <= C·K for C in {R, T}.
inline M10_9Report kodaira_infeasibility_m10_9() {
    M10_9Report rep;
    const TestCurve r = pointed_k3_pencil();
    const TestCurve t = sliding_node_curve();
    const DivisorClass k = canonical_class_mgn(10, 9);
    const NamedClass k9 = k3_pullback(9);
    DivisorClass irr(ModuliSpace{10, 9});
    irr.add_delta(BoundaryIndex::irreducible(), 1);

    rep.r_dot_k = intersect(r, k).value();
    rep.t_dot_k = intersect(t, k).value();
    rep.r_dot_kn = intersect(r, k9.cls).value();
    rep.t_dot_kn = intersect(t, k9.cls).value();
    rep.r_dot_irr = intersect(r, irr).value();
    rep.t_dot_irr = intersect(t, irr).value();

    rep.system.num_vars = 2;
    rep.system.rows.push_back({{rep.r_dot_kn, rep.r_dot_irr}, lp::Relation::LessEqual, rep.r_dot_k});
    rep.system.rows.push_back({{rep.t_dot_kn, rep.t_dot_irr}, lp::Relation::LessEqual, rep.t_dot_k});
    rep.solution = lp::solve(rep.system);
    rep.certificate_verified =
        rep.solution.status == lp::Status::Infeasible && lp::verify_farkas(rep.system, rep.solution.dual);
    return rep;
}

}  // namespace modulislope
