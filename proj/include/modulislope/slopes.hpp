#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "bounds.hpp"
#include "catalog.hpp"
#include "picard.hpp"

namespace modulislope {

/// Exact slope value or +∞.
struct Slope {
    bool infinite = true;
    Rational value;
    /// Set when the infinite value comes from a degenerate class rather than a sign condition.
    std::string note;

    static Slope infinity(std::string note = {}) { return {true, Rational(0), std::move(note)}; }
    static Slope finite(const Rational& v) { return {false, v, {}}; }

    std::string str() const { return infinite ? "infinity" : to_string(value); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.infinite) return false;
        return b.infinite || a.value < b.value;
    }
};

/// s(D) = a / min_i b_i for D = aλ − Σ b_i δ_i on M̄_g, with each b_i taken at
/// its smallest admissible value. +∞ unless a >= 0 and every b_i >= 0.
inline Slope slope(const DivisorClass& d, const BoundEnv& env = {}) {
    if (d.space().n != 0) throw SpaceMismatch("slope is defined on M_g, got " + d.space().str());
    if (d.is_zero()) return Slope::infinity("zero class");
    const LinExpr a_expr = d.lambda();
    if (!a_expr.is_constant()) throw std::invalid_argument("slope needs a numeric lambda coefficient");
    const Rational a = a_expr.constant();
    if (a < 0) return Slope::infinity();

    std::optional<Rational> min_b;
    for (int i = 0; i <= d.space().g / 2; ++i) {
        const auto b = worst_case_min(-d.delta(i), env);
        if (!b || *b < 0) return Slope::infinity();
        if (!min_b || *b < *min_b) min_b = *b;
    }
    if (*min_b == 0) return Slope::infinity(a > 0 ? "a boundary coefficient vanishes" : "");
    return Slope::finite(a / *min_b);
}

inline Slope slope(const NamedClass& nc) { return slope(nc.cls, nc.bounds); }

/// 6 + 12/(g+1).
inline Rational bn_slope(int g) {
    if (g < 2) throw std::invalid_argument("bn_slope needs g >= 2");
    return Rational(6) + Rational(12, g + 1);
}

inline bool is_composite(long long n) {
    if (n < 4) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return true;
    return false;
}

class NoPrintedBound : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Smallest known upper bound for s_g: the Brill–Noether slope when g+1 is
/// composite, the Petri slope when g is even, and 7 at g = 10.
inline Rational slope_upper_bound(int g) {
    if (g < 2) throw std::invalid_argument("slope_upper_bound needs g >= 2");
    std::optional<Rational> best;
    const auto take = [&](const Rational& v) {
        if (!best || v < *best) best = v;
    };
    if (is_composite(g + 1)) take(bn_slope(g));
    if (g % 2 == 0) take(petri_slope(g));
    if (g == k3_genus) take(slope(k3_class()).value);
    if (!best) throw NoPrintedBound("no slope bound available for g = " + std::to_string(g));
    return *best;
}

/// min_{1<=i<=⌊g/2⌋} (6 + 11/(i+1)) − slope_upper_bound(g).
inline Rational max_epsilon(int g) {
    if (g < 3 || g > 23) throw std::invalid_argument("max_epsilon is defined for 3 <= g <= 23");
    const int h = g / 2;
    const Rational floor = Rational(6) + Rational(11, h + 1);
    return floor - slope_upper_bound(g);
}

}  // namespace modulislope
