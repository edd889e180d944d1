#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "errors.hpp"
#include "linexpr.hpp"

namespace modulislope {

/// M̄_{g,n}.
struct ModuliSpace {
    int g = 2;
    int n = 0;

    static constexpr int max_marks = 24;

    void validate() const {
        if (g < 0 || n < 0) throw InvalidIndex("negative genus or marking count");
        if (n > max_marks) throw InvalidIndex("at most " + std::to_string(max_marks) + " markings supported");
        if (2 * g - 2 + n <= 0)
            throw InvalidIndex("unstable space M_{" + std::to_string(g) + "," + std::to_string(n) + "}");
        if (g == 0) throw InvalidIndex("genus 0 spaces are not modelled");
    }

    std::string str() const {
        if (n == 0) return "M_" + std::to_string(g);
        return "M_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    }

    std::uint32_t all_marks() const { return n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)); }

    friend auto operator<=>(const ModuliSpace&, const ModuliSpace&) = default;
};

/// A boundary divisor. `Irreducible` is δ_0 (n ≤ 1) or δ_irr (n ≥ 2).
/// `Separating` is the node splitting off a genus-`genus` component that
/// carries the markings in `marks` (bit k-1 for point k).
struct BoundaryIndex {
    enum class Kind : std::uint8_t { Irreducible, Separating };

    Kind kind = Kind::Irreducible;
    int genus = 0;
    std::uint32_t marks = 0;

    static BoundaryIndex irreducible() { return {}; }
    static BoundaryIndex separating(int genus, std::uint32_t marks = 0) { return {Kind::Separating, genus, marks}; }

    bool is_irreducible() const { return kind == Kind::Irreducible; }

    friend auto operator<=>(const BoundaryIndex&, const BoundaryIndex&) = default;
};

inline std::uint32_t marks_of(std::initializer_list<int> points) {
    std::uint32_t m = 0;
    for (int p : points) m |= 1u << (p - 1);
    return m;
}

inline std::string marks_str(std::uint32_t marks) {
    std::string out = "{";
    bool first = true;
    for (int p = 1; p <= 32; ++p) {
        if (!(marks & (1u << (p - 1)))) continue;
        if (!first) out += ',';
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

/// Canonical representative of `idx` on `space`; throws InvalidIndex.
inline BoundaryIndex canonicalize(const BoundaryIndex& idx, const ModuliSpace& space) {
    if (idx.is_irreducible()) {
        if (idx.genus != 0 || idx.marks != 0) throw InvalidIndex("irreducible boundary carries no data");
        return idx;
    }
    const int g = space.g;
    const std::uint32_t all = space.all_marks();
    if (idx.genus < 0 || idx.genus > g) throw InvalidIndex("boundary genus out of range");
    if (idx.marks & ~all) throw InvalidIndex("marking set is not a subset of {1..n}");

    int i = idx.genus;
    std::uint32_t s = idx.marks;
    const auto stable = [&](int h, std::uint32_t m) { return h > 0 || std::popcount(m) >= 2; };
    if (!stable(i, s) || !stable(g - i, all & ~s))
        throw InvalidIndex("boundary component of genus 0 needs at least two markings");

    if (space.n == 1) {
        if (!(s & 1u)) {
            i = g - i;
            s = 1u;
        }
        return BoundaryIndex::separating(i, s);
    }
    const std::uint32_t c = all & ~s;
    if (g - i < i || (g - i == i && space.n >= 1 && !(s & 1u))) return BoundaryIndex::separating(g - i, c);
    return BoundaryIndex::separating(i, s);
}

/// Enumerating boundary divisors is exponential in n; beyond this it is refused.
inline constexpr int max_enumerated_marks = 16;

/// All canonical boundary divisors, in BoundaryIndex order.
inline std::vector<BoundaryIndex> boundary_indices(const ModuliSpace& space) {
    space.validate();
    if (space.n > max_enumerated_marks)
        throw std::length_error("boundary enumeration on " + space.str() + " is too large (n > " +
                                std::to_string(max_enumerated_marks) + ")");
    std::vector<BoundaryIndex> out{BoundaryIndex::irreducible()};
    const int g = space.g;
    if (space.n == 0) {
        for (int i = 1; i <= g / 2; ++i) out.push_back(BoundaryIndex::separating(i));
        return out;
    }
    if (space.n == 1) {
        for (int i = 1; i <= g - 1; ++i) out.push_back(BoundaryIndex::separating(i, 1u));
        return out;
    }
    const std::uint32_t all = space.all_marks();
    for (int i = 0; 2 * i <= g; ++i) {
        for (std::uint64_t s = 0; s <= all; ++s) {
            const auto m = static_cast<std::uint32_t>(s);
            if (i == 0 && std::popcount(m) < 2) continue;
            if (g - i == 0 && std::popcount(all & ~m) < 2) continue;
            if (2 * i == g && !(m & 1u)) continue;
            out.push_back(BoundaryIndex::separating(i, m));
        }
    }
    return out;
}

/// Basis element of Pic(M̄_{g,n}) ⊗ Q.
struct Generator {
    enum class Kind : std::uint8_t { Lambda, Psi, Boundary };

    Kind kind = Kind::Lambda;
    int psi = 0;
    BoundaryIndex boundary{};

    static Generator lambda() { return {}; }
    static Generator psi_class(int i) { return {Kind::Psi, i, {}}; }
    static Generator delta(const BoundaryIndex& idx) { return {Kind::Boundary, 0, idx}; }

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// δ_i on M̄_g or M̄_{g,1} (δ_0 for i = 0).
inline BoundaryIndex delta_index(const ModuliSpace& space, int i) {
    if (space.n > 1) throw InvalidIndex("use delta_index(space, i, S) on spaces with n >= 2");
    if (i == 0) return BoundaryIndex::irreducible();
    if (space.n == 1 && (i < 1 || i > space.g - 1)) throw InvalidIndex("delta_" + std::to_string(i) + " on " + space.str());
    return canonicalize(BoundaryIndex::separating(i, space.n == 1 ? 1u : 0u), space);
}

inline BoundaryIndex delta_index(const ModuliSpace& space, int i, std::uint32_t marks) {
    return canonicalize(BoundaryIndex::separating(i, marks), space);
}

inline Generator canonical_generator(const Generator& gen, const ModuliSpace& space) {
    switch (gen.kind) {
        case Generator::Kind::Lambda:
            return gen;
        case Generator::Kind::Psi:
            if (gen.psi < 1 || gen.psi > space.n) throw InvalidIndex("psi_" + std::to_string(gen.psi) + " on " + space.str());
            return gen;
        case Generator::Kind::Boundary:
            return Generator::delta(canonicalize(gen.boundary, space));
    }
    return gen;
}

/// Short text key of a boundary index: "0".."k" for n ≤ 1, "irr" / "i:{S}" otherwise.
inline std::string boundary_key(const BoundaryIndex& idx, const ModuliSpace& space) {
    if (space.n <= 1) return idx.is_irreducible() ? "0" : std::to_string(idx.genus);
    if (idx.is_irreducible()) return "irr";
    return std::to_string(idx.genus) + ":" + marks_str(idx.marks);
}

namespace detail {

inline int parse_small_int(std::string_view text) {
    if (text.empty() || text.size() > 6) throw ParseError("invalid index '" + std::string(text) + "'");
    int v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError("invalid index '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace detail

inline BoundaryIndex parse_boundary_key(std::string_view key, const ModuliSpace& space) {
    if (space.n <= 1) {
        const int i = detail::parse_small_int(key);
        return delta_index(space, i);
    }
    if (key == "irr") return BoundaryIndex::irreducible();
    const auto colon = key.find(':');
    if (colon == std::string_view::npos) throw ParseError("boundary key '" + std::string(key) + "' needs the form i:{S}");
    const int i = detail::parse_small_int(key.substr(0, colon));
    auto set = key.substr(colon + 1);
    if (set.size() < 2 || set.front() != '{' || set.back() != '}')
        throw ParseError("boundary key '" + std::string(key) + "' needs braces around S");
    set = set.substr(1, set.size() - 2);
    std::uint32_t marks = 0;
    while (!set.empty()) {
        const auto comma = set.find(',');
        const int p = detail::parse_small_int(set.substr(0, comma));
        if (p < 1 || p > space.n) throw InvalidIndex("marking " + std::to_string(p) + " out of range");
        marks |= 1u << (p - 1);
        if (comma == std::string_view::npos) break;
        set = set.substr(comma + 1);
    }
    return canonicalize(BoundaryIndex::separating(i, marks), space);
}

/// "lambda", "psi" / "psi_i", "delta_0", "delta_3", "delta_irr", "delta_2:{1,3}".
inline std::string generator_name(const Generator& gen, const ModuliSpace& space) {
    switch (gen.kind) {
        case Generator::Kind::Lambda:
            return "lambda";
        case Generator::Kind::Psi:
            return "psi_" + std::to_string(gen.psi);
        case Generator::Kind::Boundary:
            return "delta_" + boundary_key(gen.boundary, space);
    }
    return {};
}

inline Generator parse_generator(std::string_view name, const ModuliSpace& space) {
    if (name == "lambda") return Generator::lambda();
    if (name == "psi" && space.n == 1) return Generator::psi_class(1);
    if (name.starts_with("psi_")) return canonical_generator(Generator::psi_class(detail::parse_small_int(name.substr(4))), space);
    if (name.starts_with("delta_")) return Generator::delta(parse_boundary_key(name.substr(6), space));
    throw ParseError("unknown generator '" + std::string(name) + "'");
}

/// Element of Pic(M̄_{g,n}) ⊗ Q with LinExpr coefficients.
class DivisorClass {
public:
    using Map = std::map<Generator, LinExpr>;

    DivisorClass() : DivisorClass(ModuliSpace{}) {}
    explicit DivisorClass(const ModuliSpace& space) : space_(space) { space_.validate(); }

    const ModuliSpace& space() const { return space_; }
    const Map& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LinExpr coeff(const Generator& gen) const {
        const auto it = coeffs_.find(canonical_generator(gen, space_));
        return it == coeffs_.end() ? LinExpr() : it->second;
    }
    LinExpr lambda() const { return coeff(Generator::lambda()); }
    LinExpr psi(int i) const { return coeff(Generator::psi_class(i)); }
    LinExpr delta(const BoundaryIndex& idx) const { return coeff(Generator::delta(idx)); }
    LinExpr delta(int i) const { return coeff(Generator::delta(delta_index(space_, i))); }

    DivisorClass& set(const Generator& gen, const LinExpr& value) {
        const Generator key = canonical_generator(gen, space_);
        if (value.is_zero())
            coeffs_.erase(key);
        else
            coeffs_[key] = value;
        return *this;
    }

    DivisorClass& add(const Generator& gen, const LinExpr& value) {
        if (value.is_zero()) return *this;
        const Generator key = canonical_generator(gen, space_);
        auto [it, inserted] = coeffs_.emplace(key, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
        return *this;
    }

    DivisorClass& add_lambda(const LinExpr& v) { return add(Generator::lambda(), v); }
    DivisorClass& add_psi(int i, const LinExpr& v) { return add(Generator::psi_class(i), v); }
    DivisorClass& add_delta(const BoundaryIndex& idx, const LinExpr& v) { return add(Generator::delta(idx), v); }
    DivisorClass& add_delta(int i, const LinExpr& v) { return add(Generator::delta(delta_index(space_, i)), v); }

    DivisorClass& operator+=(const DivisorClass& other) {
        require_same_space(other);
        for (const auto& [gen, c] : other.coeffs_) add_canonical(gen, c);
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& other) {
        require_same_space(other);
        for (const auto& [gen, c] : other.coeffs_) add_canonical(gen, -c);
        return *this;
    }
    DivisorClass& operator*=(const LinExpr& factor) {
        if (factor.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [gen, c] : coeffs_) c = c * factor;
        return *this;
    }

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator-(DivisorClass a) { return a *= LinExpr(-1); }
    friend DivisorClass operator*(const LinExpr& f, DivisorClass a) { return a *= f; }
    friend DivisorClass operator*(DivisorClass a, const LinExpr& f) { return a *= f; }
    friend DivisorClass operator*(const Rational& f, DivisorClass a) { return a *= LinExpr(f); }
    friend DivisorClass operator*(long long f, DivisorClass a) { return a *= LinExpr(f); }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    bool is_numeric() const {
        for (const auto& [gen, c] : coeffs_)
            if (!c.is_constant()) return false;
        return true;
    }

    std::set<std::string> symbols() const {
        std::set<std::string> out;
        for (const auto& [gen, c] : coeffs_)
            for (const auto& [name, r] : c.terms()) out.insert(name);
        return out;
    }

    template <class Values>
    DivisorClass evaluate(const Values& values) const {
        DivisorClass out(space_);
        for (const auto& [gen, c] : coeffs_) out.add_canonical(gen, c.evaluate(values));
        return out;
    }

    DivisorClass substitute(std::string_view name, const LinExpr& value) const {
        DivisorClass out(space_);
        for (const auto& [gen, c] : coeffs_) out.add_canonical(gen, c.substitute(name, value));
        return out;
    }

    /// Human-readable form, e.g. "7*lambda - delta_0 - B5*delta_5".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [gen, c] : coeffs_) {
            const std::string name = generator_name(gen, space_);
            std::string term;
            bool negative = false;
            if (c.is_constant()) {
                const Rational& v = c.constant();
                negative = v < 0;
                const Rational mag = negative ? Rational(-v) : v;
                term = mag == 1 ? name : to_string(mag) + "*" + name;
            } else {
                term = "(" + c.str() + ")*" + name;
            }
            if (out.empty())
                out = negative ? "-" + term : term;
            else
                out += (negative ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void require_same_space(const DivisorClass& other) const {
        if (other.space_ != space_) throw SpaceMismatch("classes on " + space_.str() + " and " + other.space_.str());
    }

    void add_canonical(const Generator& key, const LinExpr& value) {
        if (value.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(key, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    ModuliSpace space_;
    Map coeffs_;
};

/// Normal form on M̄_{1,1}: ψ = λ and δ_0 = 12λ, so every class is a multiple of λ.
inline DivisorClass reduce_m11(const DivisorClass& d) {
    const ModuliSpace& s = d.space();
    if (s.g != 1 || s.n != 1) throw SpaceMismatch("reduce_m11 expects M_{1,1}, got " + s.str());
    LinExpr total = d.lambda() + d.psi(1) + d.delta(0) * 12;
    DivisorClass out(s);
    out.add_lambda(total);
    return out;
}

/// Symmetric degree-2 formal combination of generators of Pic(M̄_{g,1}).
class QuadraticClass {
public:
    using Key = std::pair<Generator, Generator>;
    using Map = std::map<Key, LinExpr>;

    QuadraticClass() : QuadraticClass(ModuliSpace{2, 1}) {}
    explicit QuadraticClass(const ModuliSpace& space) : space_(space) {
        space_.validate();
        if (space_.n != 1) throw SpaceMismatch("quadratic classes live on M_{g,1}, got " + space_.str());
    }

    const ModuliSpace& space() const { return space_; }
    const Map& coefficients() const { return coeffs_; }

    static Key make_key(const Generator& a, const Generator& b) { return a <= b ? Key{a, b} : Key{b, a}; }

    LinExpr coeff(const Generator& a, const Generator& b) const {
        const auto it = coeffs_.find(make_key(canonical_generator(a, space_), canonical_generator(b, space_)));
        return it == coeffs_.end() ? LinExpr() : it->second;
    }

    QuadraticClass& add(const Generator& a, const Generator& b, const LinExpr& value) {
        if (value.is_zero()) return *this;
        const Key key = make_key(canonical_generator(a, space_), canonical_generator(b, space_));
        auto [it, inserted] = coeffs_.emplace(key, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
        return *this;
    }

    QuadraticClass& operator+=(const QuadraticClass& other) {
        if (other.space_ != space_) throw SpaceMismatch("quadratic classes on different spaces");
        for (const auto& [key, c] : other.coeffs_) add(key.first, key.second, c);
        return *this;
    }
    friend QuadraticClass operator+(QuadraticClass a, const QuadraticClass& b) { return a += b; }
    friend bool operator==(const QuadraticClass&, const QuadraticClass&) = default;

private:
    ModuliSpace space_;
    Map coeffs_;
};

/// Formal symmetric product x·y on M̄_{g,1}; throws DegreeOverflow when a
/// term would multiply two symbolic coefficients.
inline QuadraticClass product(const DivisorClass& x, const DivisorClass& y) {
    if (x.space() != y.space()) throw SpaceMismatch("product of classes on different spaces");
    QuadraticClass out(x.space());
    for (const auto& [gx, cx] : x.coefficients())
        for (const auto& [gy, cy] : y.coefficients()) out.add(gx, gy, cx * cy);
    return out;
}

}  // namespace modulislope
