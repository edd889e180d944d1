#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "linexpr.hpp"

namespace modulislope {

/// Admissible range of one unknown. A missing endpoint is infinite.
struct Bound {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_strict = false;
    bool hi_strict = false;

    static Bound at_least(const Rational& lo, bool strict = false) { return {lo, std::nullopt, strict, false}; }
    static Bound exactly(const Rational& v) { return {v, v, false, false}; }

    friend bool operator==(const Bound&, const Bound&) = default;
};

/// Closed hull of the values an expression can take; nullopt endpoints are infinite.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

/// Symbol name -> Bound. Symbols without an entry are unbounded on both sides.
///
/// Strict endpoints are treated as attained: every predicate below is
/// decided on the closure of the box.
class BoundEnv {
public:
    BoundEnv() = default;

    void set(const std::string& name, const Bound& bound) {
        if (bound.lo && bound.hi && *bound.lo > *bound.hi)
            throw std::invalid_argument("empty bound for '" + name + "'");
        bounds_[name] = bound;
    }

    const Bound* find(std::string_view name) const {
        const auto it = bounds_.find(name);
        return it == bounds_.end() ? nullptr : &it->second;
    }

    void merge(const BoundEnv& other) {
        for (const auto& [name, b] : other.bounds_) set(name, b);
    }

    bool empty() const { return bounds_.empty(); }
    std::size_t size() const { return bounds_.size(); }
    const std::map<std::string, Bound, std::less<>>& entries() const { return bounds_; }

    friend bool operator==(const BoundEnv&, const BoundEnv&) = default;

private:
    std::map<std::string, Bound, std::less<>> bounds_;
};

/// Range of `e` over the box described by `env`, evaluated corner-wise per
/// symbol according to the sign of its coefficient.
inline Interval range(const LinExpr& e, const BoundEnv& env) {
    Interval out{e.constant(), e.constant()};
    for (const auto& [name, c] : e.terms()) {
        const Bound* b = env.find(name);
        const std::optional<Rational> lo = b ? b->lo : std::nullopt;
        const std::optional<Rational> hi = b ? b->hi : std::nullopt;
        const auto& for_min = c > 0 ? lo : hi;
        const auto& for_max = c > 0 ? hi : lo;
        if (out.lo) {
            if (for_min)
                *out.lo += c * *for_min;
            else
                out.lo.reset();
        }
        if (out.hi) {
            if (for_max)
                *out.hi += c * *for_max;
            else
                out.hi.reset();
        }
    }
    return out;
}

inline std::optional<Rational> worst_case_min(const LinExpr& e, const BoundEnv& env) { return range(e, env).lo; }
inline std::optional<Rational> worst_case_max(const LinExpr& e, const BoundEnv& env) { return range(e, env).hi; }

/// True iff e >= 0 for every admissible assignment (closure of strict bounds).
inline bool nonnegative(const LinExpr& e, const BoundEnv& env) {
    const auto lo = worst_case_min(e, env);
    return lo && *lo >= 0;
}

/// First symbol whose bound is infinite in the direction that lowers `e`
/// (or raises it, when `lowering` is false).
inline std::optional<std::string> unbounded_adverse_symbol(const LinExpr& e, const BoundEnv& env,
                                                           bool lowering = true) {
    for (const auto& [name, c] : e.terms()) {
        const Bound* b = env.find(name);
        const bool toward_lo = (c > 0) == lowering;
        const bool finite = b && (toward_lo ? b->lo.has_value() : b->hi.has_value());
        if (!finite) return name;
    }
    return std::nullopt;
}

}  // namespace modulislope
