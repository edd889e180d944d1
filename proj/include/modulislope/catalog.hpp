#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "picard.hpp"

namespace modulislope {

struct NamedClass {
    std::string id;
    DivisorClass cls;
    BoundEnv bounds;
};

/// ρ(g,r,d) = g − (r+1)(g−d+r).
inline long long brill_noether_number(long long g, long long r, long long d) { return g - (r + 1) * (g - d + r); }

/// Slope of the Petri divisor on M̄_g (g even).
inline Rational petri_slope(int g) {
    if (g < 2 || g % 2 != 0) throw std::invalid_argument("petri_slope needs an even genus >= 2");
    const long long G = g;
    return Rational(2 * (3 * G * G + 13 * G + 2), G * (G + 2));
}

/// (g+3)λ − (g+1)/6 δ_0 − Σ_{i=1}^{⌊g/2⌋} i(g−i) δ_i on M̄_g.
inline DivisorClass brill_noether_class(int g) {
    if (g < 3) throw std::invalid_argument("brill_noether_class needs g >= 3");
    DivisorClass d(ModuliSpace{g, 0});
    d.add_lambda(g + 3);
    d.add_delta(0, Rational(-(g + 1), 6));
    for (int i = 1; i <= g / 2; ++i) d.add_delta(i, -static_cast<long long>(i) * (g - i));
    return d;
}

/// Weierstrass class on M̄_{g,1}: −λ + g(g+1)/2 ψ − Σ_{i=1}^{g−1} C(g−i+1, 2) δ_i.
inline DivisorClass weierstrass_class(int g) {
    if (g < 2) throw std::invalid_argument("weierstrass_class needs g >= 2");
    DivisorClass d(ModuliSpace{g, 1});
    d.add_lambda(-1);
    d.add_psi(1, Rational(g * (g + 1), 2));
    for (int i = 1; i <= g - 1; ++i) d.add_delta(i, Rational(-binomial(g - i + 1, 2)));
    return d;
}

/// The same coefficients as brill_noether_class, read on M̄_{g,1} with i = 1..g−1.
inline DivisorClass bn1_pointed_class(int g) {
    if (g < 3) throw std::invalid_argument("bn1_pointed_class needs g >= 3");
    DivisorClass d(ModuliSpace{g, 1});
    d.add_lambda(g + 3);
    d.add_delta(0, Rational(-(g + 1), 6));
    for (int i = 1; i <= g - 1; ++i) d.add_delta(i, -static_cast<long long>(i) * (g - i));
    return d;
}

inline constexpr int k3_genus = 10;

/// Coefficients −b_0..−b_4 of the K3 class; −b_5 is the symbol B5 ≥ 6.
inline const long long k3_boundary[5] = {1, 5, 9, 12, 14};

inline NamedClass k3_class() {
    DivisorClass d(ModuliSpace{k3_genus, 0});
    d.add_lambda(7);
    for (int i = 0; i < 5; ++i) d.add_delta(i, -k3_boundary[i]);
    d.add_delta(5, -LinExpr::symbol("B5"));
    BoundEnv env;
    env.set("B5", Bound::at_least(6));
    return {"k3", d, env};
}

namespace detail {

/// True when one side of the node has genus 1.
inline bool has_elliptic_side(const BoundaryIndex& idx, int g) {
    return !idx.is_irreducible() && (idx.genus == 1 || g - idx.genus == 1);
}

}  // namespace detail

/// K of M̄_{g,n}: 13λ − 2δ_irr + Σψ_i − 2Σδ_{i:S} − Σδ_{1:S}.
inline DivisorClass canonical_class_mgn(int g, int n) {
    const ModuliSpace space{g, n};
    DivisorClass d(space);
    d.add_lambda(13);
    for (int i = 1; i <= n; ++i) d.add_psi(i, 1);
    for (const auto& idx : boundary_indices(space)) {
        const long long c = detail::has_elliptic_side(idx, g) ? -3 : -2;
        d.add_delta(idx, c);
    }
    return d;
}

/// Canonical class of the universal curve over M̄_g, as a class on M̄_{g,1}:
/// 13λ + ψ − 3(δ_1 + δ_{g−1}) − 2Σ_{i=2}^{g−2} δ_i, plus −2δ_0 when requested.
inline DivisorClass canonical_class_mg1(int g, bool with_delta0 = false) {
    if (g < 3) throw std::invalid_argument("canonical_class_mg1 needs g >= 3");
    DivisorClass d(ModuliSpace{g, 1});
    d.add_lambda(13);
    d.add_psi(1, 1);
    d.add_delta(1, -3);
    d.add_delta(g - 1, -3);
    for (int i = 2; i <= g - 2; ++i) d.add_delta(i, -2);
    if (with_delta0) d.add_delta(0, -2);
    return d;
}

namespace detail {

inline std::string boundary_symbol(std::string_view prefix, const BoundaryIndex& idx, const ModuliSpace& space) {
    return std::string(prefix) + "[" + boundary_key(idx, space) + "]";
}

/// Lower bound 2 on δ_{0:S} symbols, strict 0 elsewhere.
inline Bound pointed_boundary_bound(const BoundaryIndex& idx) {
    if (idx.genus == 0) return Bound::at_least(2);
    return Bound::at_least(0, true);
}

/// −λ + w Σψ_i − Σ_{i:S} sym[i:S] δ_{i:S}, δ_irr coefficient 0.
inline NamedClass pointed_symbolic_class(std::string id, const ModuliSpace& space, const Rational& psi_weight,
                                         std::string_view prefix) {
    DivisorClass d(space);
    BoundEnv env;
    d.add_lambda(-1);
    for (int i = 1; i <= space.n; ++i) d.add_psi(i, psi_weight);
    for (const auto& idx : boundary_indices(space)) {
        if (idx.is_irreducible()) continue;
        const std::string name = boundary_symbol(prefix, idx, space);
        d.add_delta(idx, -LinExpr::symbol(name));
        env.set(name, pointed_boundary_bound(idx));
    }
    return {std::move(id), d, env};
}

}  // namespace detail

/// The divisor D on M̄_{g,g} with bounded symbols c[i:{S}].
inline NamedClass pointed_bn_general_divisor(int g) {
    if (g < 2) throw std::invalid_argument("pointed_bn_general_divisor needs g >= 2");
    return detail::pointed_symbolic_class("pointed-bn:" + std::to_string(g), ModuliSpace{g, g}, 1, "c");
}

/// π_n^*(K) on M̄_{10,n}, built from its coefficient description.
inline NamedClass k3_pullback(int n) {
    if (n < 0) throw std::invalid_argument("k3_pullback needs n >= 0");
    NamedClass k3 = k3_class();
    if (n == 0) return {"k3-pullback:0", k3.cls, k3.bounds};
    const ModuliSpace space{k3_genus, n};
    DivisorClass d(space);
    d.add_lambda(k3.cls.lambda());
    for (const auto& idx : boundary_indices(space)) {
        if (idx.is_irreducible()) {
            d.add_delta(idx, k3.cls.delta(0));
            continue;
        }
        const int i = std::min(idx.genus, k3_genus - idx.genus);
        if (i == 0) continue;
        d.add_delta(idx, k3.cls.delta(i));
    }
    return {"k3-pullback:" + std::to_string(n), d, k3.bounds};
}

/// 𝔇_n on M̄_{10,n}: −λ + (10/n)Σψ_i − Σ ct[i:S] δ_{i:S}.
inline NamedClass averaged_weierstrass(int n) {
    if (n < 10) throw std::invalid_argument("averaged_weierstrass needs n >= 10");
    return detail::pointed_symbolic_class("averaged-weierstrass:" + std::to_string(n), ModuliSpace{k3_genus, n},
                                          Rational(k3_genus, n), "ct");
}

/// Parametrised id patterns understood by lookup_class.
inline std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"k3", "K3 divisor class on M_10 (delta_5 coefficient -B5, B5 >= 6)"},
        {"bn:<g>", "Brill-Noether class on M_g, g >= 3"},
        {"weierstrass:<g>", "Weierstrass divisor on M_{g,1}, g >= 2"},
        {"bn1:<g>", "pointed Brill-Noether class on M_{g,1}, g >= 3"},
        {"canonical:<g>:<n>", "canonical class of M_{g,n}"},
        {"canonical1:<g>", "canonical class of the universal curve, printed form"},
        {"canonical1-d0:<g>", "canonical class of the universal curve with the -2 delta_0 term"},
        {"pointed-bn:<g>", "divisor D on M_{g,g} with bounded symbols c[i:{S}]"},
        {"k3-pullback:<n>", "pullback of the K3 class to M_{10,n}"},
        {"averaged-weierstrass:<n>", "averaged Weierstrass class on M_{10,n}, n >= 10"},
    };
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text = text.substr(pos + 1);
    }
    return parts;
}

inline int parse_param(std::string_view text, std::string_view id) {
    try {
        return parse_small_int(text);
    } catch (const ParseError&) {
        throw ParseError("bad parameter in catalog id '" + std::string(id) + "'");
    }
}

}  // namespace detail

/// Builds the named class for an id such as "k3", "bn:10", "canonical:10:9".
inline NamedClass lookup_class(std::string_view id) {
    const auto parts = detail::split(id, ':');
    const auto& head = parts[0];
    const auto arg = [&](std::size_t k) { return detail::parse_param(parts.at(k), id); };
    const std::string key(id);
    if (head == "k3" && parts.size() == 1) return k3_class();
    if (parts.size() == 2) {
        const int p = arg(1);
        if (head == "bn") return {key, brill_noether_class(p), {}};
        if (head == "weierstrass") return {key, weierstrass_class(p), {}};
        if (head == "bn1") return {key, bn1_pointed_class(p), {}};
        if (head == "canonical1") return {key, canonical_class_mg1(p, false), {}};
        if (head == "canonical1-d0") return {key, canonical_class_mg1(p, true), {}};
        if (head == "pointed-bn") return pointed_bn_general_divisor(p);
        if (head == "k3-pullback") return k3_pullback(p);
        if (head == "averaged-weierstrass") return averaged_weierstrass(p);
    }
    if (parts.size() == 3 && head == "canonical") return {key, canonical_class_mgn(arg(1), arg(2)), {}};
    throw ParseError("unknown catalog id '" + key + "'");
}

}  // namespace modulislope
