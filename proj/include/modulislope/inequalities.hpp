#pragma once

#include <string>

#include "catalog.hpp"
#include "moduli_maps.hpp"
#include "picard.hpp"
#include "slopes.hpp"
#include "testcurves.hpp"

namespace modulislope {

struct IneqResult {
    Rational residual;
    bool holds() const { return residual >= 0; }
};

namespace detail {

inline Rational numeric_coeff(const LinExpr& e, const char* what) {
    if (!e.is_constant()) throw std::invalid_argument(std::string(what) + " must be numeric");
    return e.constant();
}

inline Rational a_of(const DivisorClass& d) { return numeric_coeff(d.lambda(), "lambda coefficient"); }
inline Rational b_of(const DivisorClass& d, int i) { return -numeric_coeff(d.delta(i), "boundary coefficient"); }

inline void require_mg(const DivisorClass& d, int min_genus, const char* op) {
    if (d.space().n != 0) throw SpaceMismatch(std::string(op) + " expects a class on M_g");
    if (d.space().g < min_genus) throw std::invalid_argument(std::string(op) + " needs g >= " + std::to_string(min_genus));
}

}  // namespace detail

/// b_i − (6i+18)b_0 + (i+1)a for 2 <= i <= 11, symbols kept. At i = 10 the
/// caller must assert that D does not contain the divisor Z.
inline LinExpr ineq_a_residual(const DivisorClass& d, int i, bool excludes_z = false) {
    if (i < 2 || i > 11) throw InvalidIndex("inequality (a) covers 2 <= i <= 11");
    if (i == 10 && !excludes_z) throw InvalidIndex("inequality (a) at i = 10 needs the Z-exclusion hypothesis");
    detail::require_mg(d, i + 1, "check_ineq_a");
    return -d.delta(i) + d.delta(0) * (6 * i + 18) + d.lambda() * (i + 1);
}

inline IneqResult check_ineq_a(const DivisorClass& d, int i, bool excludes_z = false) {
    return {detail::numeric_coeff(ineq_a_residual(d, i, excludes_z), "residual")};
}

/// b_1 − 12b_0 + a.
inline IneqResult check_ineq_c(const DivisorClass& d) {
    detail::require_mg(d, 2, "check_ineq_c");
    return {detail::b_of(d, 1) - 12 * detail::b_of(d, 0) + detail::a_of(d)};
}

struct CaseBDerivation {
    LinExpr lambda_coeff;
    LinExpr delta0_coeff;
    LinExpr m_floor;     // lower bound for m
    LinExpr eliminated;  // λ coefficient after substituting the lower bound for m
    Rational coef_b0;
    Rational coef_a;  // signed: b_10 >= coef_b0·b_0 + coef_a·a
};

/// Symbolic derivation of the weak bound on b_10, with unknowns a, b0..b10, m.
inline CaseBDerivation derive_case_b_constants() {
    constexpr int g = 20;
    constexpr int h = 10;
    const LinExpr a = LinExpr::symbol("a");
    const LinExpr m = LinExpr::symbol("m");
    const auto b = [](int i) { return LinExpr::symbol("b" + std::to_string(i)); };

    DivisorClass d(ModuliSpace{g, 0});
    d.add_lambda(a);
    for (int i = 0; i <= g / 2; ++i) d.add_delta(i, -b(i));
    const DivisorClass pulled = pullback_attach(h, g, d);

    const DivisorClass k3 = k3_class().cls;
    DivisorClass e(ModuliSpace{h, 1});
    e.add_lambda(pulled.lambda() - m * k3.lambda());
    e.add_psi(1, pulled.psi(1));
    e.add_delta(0, pulled.delta(0) - m * k3.delta(0));

    const DivisorClass pushed = pushforward(product(weierstrass_class(h), e));
    CaseBDerivation out;
    out.lambda_coeff = pushed.lambda();
    out.delta0_coeff = pushed.delta(0);

    // B·π^*K = −1 for the pointed pencil B, so m >= −B·j^*(D).
    TestCurve pencil("pointed-lefschetz:10", ModuliSpace{h, 1});
    pencil.set(Generator::lambda(), 11);
    pencil.set(Generator::delta(BoundaryIndex::irreducible()), 78);
    pencil.set(Generator::psi_class(1), 1);
    if (intersect(pencil, k3_pullback(1).cls) != LinExpr(-1))
        throw std::logic_error("case (b): pencil does not meet the K3 pullback in -1");
    out.m_floor = -intersect(pencil, pulled);

    const Rational m_coeff = out.lambda_coeff.coefficient("m");
    if (m_coeff >= 0) throw std::logic_error("case (b): lambda coefficient is not decreasing in m");
    out.eliminated = out.lambda_coeff.substitute("m", out.m_floor);

    const Rational c10 = out.eliminated.coefficient("b10");
    if (c10 <= 0 || out.eliminated.constant() != 0 || out.eliminated.terms().size() != 3)
        throw std::logic_error("case (b): unexpected shape " + out.eliminated.str());
    out.coef_b0 = -out.eliminated.coefficient("b0") / c10;
    out.coef_a = -out.eliminated.coefficient("a") / c10;
    return out;
}

struct IneqBResult {
    Rational strong_residual;  // b_10 − 78b_0 + 11a
    Rational weak_residual;    // b_10 − c_0·b_0 − c_a·a with the derived constants
    bool holds() const { return strong_residual >= 0 || weak_residual >= 0; }
};

inline IneqBResult check_ineq_b(const DivisorClass& d) {
    detail::require_mg(d, 20, "check_ineq_b");
    static const CaseBDerivation k = derive_case_b_constants();
    const Rational a = detail::a_of(d), b0 = detail::b_of(d, 0), b10 = detail::b_of(d, 10);
    return {b10 - 78 * b0 + 11 * a, b10 - k.coef_b0 * b0 - k.coef_a * a};
}

/// Largest a/b_0 for which the inequality at index i forces b_i >= b_0.
inline Rational corollary_threshold(int i) {
    if (i < 1 || i > 11) throw InvalidIndex("corollary_threshold covers 1 <= i <= 11");
    if (i == 1) return 11;
    if (i == 10) {
        const CaseBDerivation k = derive_case_b_constants();
        return (k.coef_b0 - 1) / -k.coef_a;
    }
    return Rational(6 * i + 17, i + 1);
}

/// min_{1<=i<=⌊g/2⌋} corollary_threshold(i) − slope_upper_bound(g).
inline Rational pipeline_epsilon(int g) {
    if (g < 3 || g > 23) throw std::invalid_argument("pipeline_epsilon is defined for 3 <= g <= 23");
    Rational best = corollary_threshold(1);
    for (int i = 2; i <= g / 2; ++i) best = std::min(best, corollary_threshold(i));
    return best - slope_upper_bound(g);
}

}  // namespace modulislope
