#pragma once

#include <map>
#include <string>

#include "bounds.hpp"
#include "catalog.hpp"
#include "picard.hpp"

namespace modulislope {

/// A curve in M̄_{g,n} recorded by its intersection numbers with the basis.
class TestCurve {
public:
    TestCurve(std::string name, const ModuliSpace& space) : name_(std::move(name)), space_(space) { space_.validate(); }

    const std::string& name() const { return name_; }
    const ModuliSpace& space() const { return space_; }
    const std::map<Generator, Rational>& numbers() const { return numbers_; }

    TestCurve& set(const Generator& gen, const Rational& value) {
        const Generator key = canonical_generator(gen, space_);
        if (value == 0)
            numbers_.erase(key);
        else
            numbers_[key] = value;
        return *this;
    }

    Rational number(const Generator& gen) const {
        const auto it = numbers_.find(canonical_generator(gen, space_));
        return it == numbers_.end() ? Rational(0) : it->second;
    }

    /// Formal sum of curves.
    TestCurve& operator+=(const TestCurve& other) {
        if (other.space_ != space_) throw SpaceMismatch("curves on different spaces");
        for (const auto& [gen, v] : other.numbers_) set(gen, number(gen) + v);
        name_ += "+" + other.name_;
        return *this;
    }

private:
    std::string name_;
    ModuliSpace space_;
    std::map<Generator, Rational> numbers_;
};

/// Curve induced by a Lefschetz pencil on a K3 surface: B·λ = g+1, B·δ_0 = 6g+18.
inline TestCurve lefschetz_pencil(int g) {
    if (g < 2) throw std::invalid_argument("lefschetz_pencil needs g >= 2");
    TestCurve c("lefschetz:" + std::to_string(g), ModuliSpace{g, 0});
    c.set(Generator::lambda(), g + 1);
    c.set(Generator::delta(BoundaryIndex::irreducible()), 6 * g + 18);
    return c;
}

/// Genus-i pencil attached at a fixed point of a fixed genus-(g−i) curve.
inline TestCurve attached_pencil(int i, int g) {
    if (i < 2 || i > g - 1) throw InvalidIndex("attached_pencil needs 2 <= i <= g-1");
    const ModuliSpace space{g, 0};
    TestCurve c("attached:" + std::to_string(i) + ":" + std::to_string(g), space);
    c.set(Generator::lambda(), i + 1);
    c.set(Generator::delta(BoundaryIndex::irreducible()), 6 * i + 18);
    c.set(Generator::delta(delta_index(space, i)), -1);
    return c;
}

/// R on M̄_{10,9}: pencil on a K3 surface with nine base points as sections.
inline TestCurve pointed_k3_pencil() {
    const ModuliSpace space{10, 9};
    TestCurve c("R", space);
    c.set(Generator::lambda(), 11);
    c.set(Generator::delta(BoundaryIndex::irreducible()), 78);
    for (int i = 1; i <= 9; ++i) c.set(Generator::psi_class(i), 1);
    return c;
}

/// T on M̄_{10,9}: a node sliding along a fixed 9-pointed genus-9 curve.
inline TestCurve sliding_node_curve() {
    const ModuliSpace space{10, 9};
    TestCurve c("T", space);
    c.set(Generator::delta(BoundaryIndex::irreducible()), -18);
    c.set(Generator::delta(BoundaryIndex::separating(1, 0)), 1);
    for (int i = 1; i <= 9; ++i) c.set(Generator::psi_class(i), 1);
    return c;
}

/// Σ over generators of (C·gen) × coeff(D, gen). Symbols in D stay symbolic.
inline LinExpr intersect(const TestCurve& c, const DivisorClass& d) {
    if (c.space() != d.space())
        throw SpaceMismatch("curve on " + c.space().str() + " paired with class on " + d.space().str());
    LinExpr total;
    for (const auto& [gen, v] : c.numbers()) total += d.coeff(gen) * v;
    return total;
}

/// Pairing together with the range over the admissible symbol values.
inline Interval intersect_range(const TestCurve& c, const DivisorClass& d, const BoundEnv& env) {
    return range(intersect(c, d), env);
}

struct ObstructionReport {
    bool obstructed = false;
    Rational value;
};

/// B·D for the Lefschetz curve; negative means D contains the K3 locus.
inline ObstructionReport k3_containment_obstruction(const DivisorClass& d) {
    if (d.space().n != 0) throw SpaceMismatch("k3_containment_obstruction expects a class on M_g");
    if (!d.is_numeric()) throw std::invalid_argument("k3_containment_obstruction expects numeric coefficients");
    const Rational v = intersect(lefschetz_pencil(d.space().g), d).value();
    return {v < 0, v};
}

/// Resolves "lefschetz:<g>", "attached:<i>:<g>", "R"/"pointed-k3-pencil", "T"/"sliding-node".
inline TestCurve lookup_curve(std::string_view name) {
    if (name == "R" || name == "pointed-k3-pencil") return pointed_k3_pencil();
    if (name == "T" || name == "sliding-node") return sliding_node_curve();
    const auto parts = detail::split(name, ':');
    if (parts[0] == "lefschetz" && parts.size() == 2) return lefschetz_pencil(detail::parse_param(parts[1], name));
    if (parts[0] == "attached" && parts.size() == 3)
        return attached_pencil(detail::parse_param(parts[1], name), detail::parse_param(parts[2], name));
    throw ParseError("unknown curve '" + std::string(name) + "'");
}

}  // namespace modulislope
