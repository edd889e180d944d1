#pragma once

#include <map>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "effectivity.hpp"
#include "lp.hpp"
#include "picard.hpp"
#include "testcurves.hpp"

namespace modulislope {

struct M10_10Report {
    DivisorClass remainder{ModuliSpace{10, 10}};
    BoundEnv bounds;
    LinExpr lambda_residual, irr_residual;
    std::map<int, LinExpr> psi_residuals;
    /// Smallest worst-case value over boundary divisors, keyed by the genus part.
    std::map<int, Rational> boundary_minimum;
    std::size_t boundary_count = 0;
    bool boundary_nonnegative = false;

    bool holds() const {
        if (!lambda_residual.is_zero() || !irr_residual.is_zero()) return false;
        for (const auto& [i, r] : psi_residuals)
            if (!r.is_zero()) return false;
        return boundary_nonnegative;
    }
};

/// K − 2𝔎_10 − 𝔇_10 on M̄_{10,10}.
inline M10_10Report check_m10_10_nonnegative() {
    constexpr int n = 10;
    const NamedClass kn = k3_pullback(n);
    const NamedClass dn = averaged_weierstrass(n);
    M10_10Report rep;
    rep.bounds.merge(kn.bounds);
    rep.bounds.merge(dn.bounds);
    rep.remainder = canonical_class_mgn(10, n) - 2 * kn.cls - dn.cls;
    rep.lambda_residual = rep.remainder.lambda();
    rep.irr_residual = rep.remainder.delta(BoundaryIndex::irreducible());
    for (int i = 1; i <= n; ++i) rep.psi_residuals[i] = rep.remainder.psi(i);
    rep.boundary_nonnegative = true;
    for (const auto& idx : boundary_indices(rep.remainder.space())) {
        if (idx.is_irreducible()) continue;
        ++rep.boundary_count;
        const auto lo = worst_case_min(rep.remainder.delta(idx), rep.bounds);
        if (!lo || *lo < 0) {
            rep.boundary_nonnegative = false;
            continue;
        }
        auto it = rep.boundary_minimum.find(idx.genus);
        if (it == rep.boundary_minimum.end() || *lo < it->second) rep.boundary_minimum[idx.genus] = *lo;
    }
    return rep;
}

struct GeneralTypeReport {
    int n = 0;
    Rational ratio_floor;
    bool feasible = false;
    /// max t with t <= α, β, a, b_irr, c_i, 1.
    Rational margin;
    Rational alpha, beta, a, b_irr;
    std::vector<Rational> c;
    std::size_t rows = 0;
    lp::Program program;
    std::vector<Rational> dual;
    bool certificate_verified = false;
};

/// Searches for α, β, a, b_irr, c_i > 0 with a >= ratio_floor·b_irr such that
/// K − α𝔎_n − β𝔇_n − (aλ − b_irr δ_irr + Σ c_i ψ_i) has λ, ψ parts 0 and all
/// boundary coefficients >= 0 at the worst-case symbol values.
inline GeneralTypeReport general_type_certificate(int n, const Rational& ratio_floor) {
    if (n < 10) throw std::invalid_argument("general_type_certificate needs n >= 10");
    if (ratio_floor < 0) throw std::invalid_argument("ratio_floor must be nonnegative");
    const NamedClass kn = k3_pullback(n);
    const NamedClass dn = averaged_weierstrass(n);
    const DivisorClass k = canonical_class_mgn(10, n);
    BoundEnv env;
    env.merge(kn.bounds);
    env.merge(dn.bounds);

    // Variables: α, β, a, b_irr, c_1..c_n, t.
    const std::size_t ALPHA = 0, BETA = 1, A = 2, BIRR = 3, C0 = 4, T = 4 + static_cast<std::size_t>(n);
    const std::size_t nv = T + 1;
    GeneralTypeReport rep;
    rep.n = n;
    rep.ratio_floor = ratio_floor;
    lp::Program& p = rep.program;
    p.num_vars = nv;
    const auto row = [&](std::initializer_list<std::pair<std::size_t, Rational>> entries, lp::Relation rel,
                         const Rational& rhs) {
        std::vector<Rational> coeffs(nv, Rational(0));
        for (const auto& [j, v] : entries) coeffs[j] += v;
        p.rows.push_back({std::move(coeffs), rel, rhs});
    };
    const auto numeric = [](const LinExpr& e) { return e.value(); };

    // λ: K_λ − α𝔎_λ − β𝔇_λ − a = 0.
    row({{ALPHA, numeric(kn.cls.lambda())}, {BETA, numeric(dn.cls.lambda())}, {A, 1}}, lp::Relation::Equal,
        numeric(k.lambda()));
    // ψ_i: K_ψ − β𝔇_ψ − c_i = 0.
    for (int i = 1; i <= n; ++i)
        row({{BETA, numeric(dn.cls.psi(i))}, {C0 + static_cast<std::size_t>(i - 1), 1}}, lp::Relation::Equal,
            numeric(k.psi(i)));
    // δ_irr: K − α𝔎 − β𝔇 + b_irr >= 0.
    const BoundaryIndex irr = BoundaryIndex::irreducible();
    row({{ALPHA, numeric(kn.cls.delta(irr))}, {BETA, numeric(dn.cls.delta(irr))}, {BIRR, -1}}, lp::Relation::LessEqual,
        numeric(k.delta(irr)));
    // δ_{i:S}: α·max𝔎 + β·max𝔇 <= K, deduplicated.
    std::set<std::tuple<Rational, Rational, Rational>> seen;
    for (const auto& idx : boundary_indices(k.space())) {
        if (idx.is_irreducible()) continue;
        const auto ka = worst_case_max(kn.cls.delta(idx), env);
        const auto da = worst_case_max(dn.cls.delta(idx), env);
        if (!ka || !da) throw std::logic_error("unbounded symbol in general_type_certificate");
        const Rational kc = numeric(k.delta(idx));
        if (seen.emplace(*ka, *da, kc).second) row({{ALPHA, *ka}, {BETA, *da}}, lp::Relation::LessEqual, kc);
    }
    // a >= floor·b_irr.
    row({{A, -1}, {BIRR, ratio_floor}}, lp::Relation::LessEqual, 0);
    // t <= every positive unknown, t <= 1.
    for (std::size_t j = 0; j < T; ++j) row({{T, 1}, {j, -1}}, lp::Relation::LessEqual, 0);
    row({{T, 1}}, lp::Relation::LessEqual, 1);
    p.objective.assign(nv, Rational(0));
    p.objective[T] = 1;
    rep.rows = p.rows.size();

    const lp::Solution sol = lp::solve(p);
    if (sol.status != lp::Status::Optimal) throw std::logic_error("general_type_certificate: LP not optimal");
    rep.margin = sol.value;
    rep.feasible = sol.value > 0;
    rep.alpha = sol.x[ALPHA];
    rep.beta = sol.x[BETA];
    rep.a = sol.x[A];
    rep.b_irr = sol.x[BIRR];
    rep.c.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(C0), sol.x.begin() + static_cast<std::ptrdiff_t>(T));
    rep.dual = sol.dual;
    rep.certificate_verified = rep.feasible ? lp::verify_primal(p, sol.x) : lp::verify_dual_bound(p, sol.dual, sol.value);

    if (rep.feasible) {
        // Independent check on the class itself.
        DivisorClass big(k.space());
        big.add_lambda(rep.a);
        big.add_delta(irr, -rep.b_irr);
        for (int i = 1; i <= n; ++i) big.add_psi(i, rep.c[static_cast<std::size_t>(i - 1)]);
        const DivisorClass rest = k - rep.alpha * kn.cls - rep.beta * dn.cls - big;
        bool ok = rest.lambda().is_zero();
        for (int i = 1; i <= n; ++i) ok = ok && rest.psi(i).is_zero();
        for (const auto& [gen, c] : rest.coefficients())
            if (gen.kind == Generator::Kind::Boundary) ok = ok && nonnegative(c, env);
        rep.certificate_verified = rep.certificate_verified && ok;
    }
    return rep;
}

struct M10_9Summary {
    M10_9Report system;
    Rational t_dot_irr;
    bool holds() const { return system.infeasible() && system.r_dot_k == -4; }
};

inline M10_9Summary check_m10_9_negative() {
    M10_9Summary s;
    s.system = kodaira_infeasibility_m10_9();
    s.t_dot_irr = s.system.t_dot_irr;
    return s;
}

}  // namespace modulislope
