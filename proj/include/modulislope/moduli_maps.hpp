#pragma once

#include <set>
#include <stdexcept>

#include "picard.hpp"

namespace modulislope {

namespace detail {

inline void require_unpointed(const DivisorClass& d, const char* op) {
    if (d.space().n != 0) throw SpaceMismatch(std::string(op) + " expects a class on M_g, got " + d.space().str());
}

}  // namespace detail

/// Pullback along j: M̄_{i,1} → M̄_g, attaching a fixed pointed curve of genus g−i.
///
/// λ ↦ λ, δ_0 ↦ δ_0, δ_i ↦ −ψ + δ_{2i−g}, δ_k ↦ δ_{i−k} + δ_{i+k−g} otherwise.
/// Target indices ≤ 0 vanish (only δ_0 itself produces δ_0). On M̄_{1,1} the
/// result is put in normal form.
inline DivisorClass pullback_attach(int i, int g, const DivisorClass& d) {
    detail::require_unpointed(d, "pullback_attach");
    if (d.space().g != g) throw SpaceMismatch("pullback_attach: class is on " + d.space().str());
    if (i < 1 || i > g - 1) throw InvalidIndex("pullback_attach needs 1 <= i <= g-1");
    const ModuliSpace target{i, 1};
    DivisorClass out(target);

    const auto emit = [&](int t, const LinExpr& c) {
        if (t <= 0) return;
        if (t >= i) throw std::logic_error("pullback_attach produced delta_" + std::to_string(t) + " on " + target.str());
        out.add_delta(t, c);
    };

    for (const auto& [gen, c] : d.coefficients()) {
        if (gen.kind == Generator::Kind::Lambda) {
            out.add_lambda(c);
            continue;
        }
        if (gen.boundary.is_irreducible()) {
            out.add_delta(0, c);
            continue;
        }
        const int k = gen.boundary.genus;
        if (k == i || g - k == i) {
            out.add_psi(1, -c);
            emit(2 * i - g, c);
            continue;
        }
        std::set<int> targets{i - k, i + k - g};
        for (int t : targets) emit(t, c);
    }
    return target.g == 1 ? reduce_m11(out) : out;
}

namespace detail {

inline int fold(int j, int g) { return std::min(j, g - j); }

/// Adds the image of c·a·b under π_* to `out`.
inline void push_pair(const Generator& a, const Generator& b, const LinExpr& c, DivisorClass& out) {
    using K = Generator::Kind;
    const int g = out.space().g;
    const LinExpr two_g_minus_2 = c * static_cast<long long>(2 * g - 2);
    const auto is_psi = [](const Generator& x) { return x.kind == K::Psi; };
    const auto is_lambda = [](const Generator& x) { return x.kind == K::Lambda; };
    const auto is_d0 = [](const Generator& x) { return x.kind == K::Boundary && x.boundary.is_irreducible(); };
    const auto is_dj = [](const Generator& x) { return x.kind == K::Boundary && !x.boundary.is_irreducible(); };

    if (is_psi(a) && is_psi(b)) {
        out.add_lambda(c * 12);
        for (int j = 0; j <= g / 2; ++j) out.add_delta(j, -c);
        return;
    }
    if ((is_lambda(a) && is_psi(b)) || (is_psi(a) && is_lambda(b))) {
        out.add_lambda(two_g_minus_2);
        return;
    }
    if ((is_psi(a) && is_d0(b)) || (is_d0(a) && is_psi(b))) {
        out.add_delta(0, two_g_minus_2);
        return;
    }
    if ((is_psi(a) && is_dj(b)) || (is_dj(a) && is_psi(b))) {
        const int j = is_dj(a) ? a.boundary.genus : b.boundary.genus;
        out.add_delta(fold(j, g), c * static_cast<long long>(2 * j - 1));
        return;
    }
    if (is_dj(a) && is_dj(b)) {
        const int j = a.boundary.genus;
        const int k = b.boundary.genus;
        if (j == k)
            out.add_delta(fold(j, g), -c);
        else if (j + k == g)
            out.add_delta(fold(j, g), c);
    }
}

}  // namespace detail

/// π_*: quadratic classes on M̄_{g,1} → divisor classes on M̄_g.
///
/// ψ² ↦ 12λ − δ, λψ ↦ (2g−2)λ, ψδ_0 ↦ (2g−2)δ_0, ψδ_j ↦ (2j−1)δ_j,
/// δ_j² ↦ −δ_j, δ_jδ_{g−j} ↦ δ_j; every other pair ↦ 0.
inline DivisorClass pushforward(const QuadraticClass& q) {
    const ModuliSpace base{q.space().g, 0};
    DivisorClass out(base);
    for (const auto& [key, c] : q.coefficients()) detail::push_pair(key.first, key.second, c, out);
    return out;
}

/// π_n^*: M̄_g → M̄_{g,n} forgetting all markings.
inline DivisorClass pullback_forgetful_to_pointed(const DivisorClass& d, int n) {
    detail::require_unpointed(d, "pullback_forgetful_to_pointed");
    if (n < 1) throw std::invalid_argument("pullback_forgetful_to_pointed needs n >= 1");
    const int g = d.space().g;
    const ModuliSpace target{g, n};
    DivisorClass out(target);
    out.add_lambda(d.lambda());
    const std::vector<BoundaryIndex> indices = boundary_indices(target);
    for (const auto& [gen, c] : d.coefficients()) {
        if (gen.kind != Generator::Kind::Boundary) continue;
        if (gen.boundary.is_irreducible()) {
            out.add_delta(BoundaryIndex::irreducible(), c);
            continue;
        }
        const int i = gen.boundary.genus;
        for (const auto& idx : indices)
            if (!idx.is_irreducible() && (idx.genus == i || idx.genus == g - i)) out.add_delta(idx, c);
    }
    return out;
}

/// Coefficient of B_2 in m^*(D) for the five-tails map m: M̄_{0,5} → M̄_10.
/// m^*(δ_4) = B_2, m^*(δ_2) = −3/2 B_2, every other generator ↦ 0.
inline LinExpr tails_pullback_m5(const DivisorClass& d) {
    detail::require_unpointed(d, "tails_pullback_m5");
    if (d.space().g != 10) throw SpaceMismatch("tails_pullback_m5 expects a class on M_10");
    return d.delta(2) * Rational(-3, 2) + d.delta(4);
}

}  // namespace modulislope
