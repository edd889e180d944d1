#pragma once

// Randomised checks shared by the property tests and the acceptance binary.

#include <random>
#include <string>

#include <modulislope/modulislope.hpp>

#include "oracle/fourier_motzkin.hpp"

namespace props {

using namespace modulislope;

struct Tally {
    int trials = 0;
    int failures = 0;
    std::string first;

    void record(bool ok, const std::string& what) {
        ++trials;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    bool ok() const { return failures == 0; }
    std::string str() const {
        return std::to_string(trials - failures) + "/" + std::to_string(trials) + (first.empty() ? "" : "; first: " + first);
    }
};

inline Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
    return Rational(num(rng), den(rng));
}

/// Random numeric class on M_g. When `middle` is false, δ_{g/2} is left out for even g.
inline DivisorClass random_class(std::mt19937& rng, int g, bool middle = true) {
    DivisorClass d(ModuliSpace{g, 0});
    d.add_lambda(small_rational(rng));
    for (int i = 0; i <= g / 2; ++i) {
        if (!middle && g % 2 == 0 && i == g / 2) continue;
        d.add_delta(i, small_rational(rng));
    }
    return d;
}

inline int random_genus(std::mt19937& rng, int lo = 2, int hi = 30) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline DivisorClass psi_class(int g) {
    DivisorClass p(ModuliSpace{g, 1});
    p.add_psi(1, 1);
    return p;
}

/// π_*(ψ·π^*D) = (2g-2)D.
inline bool psi_identity(const DivisorClass& d) {
    const int g = d.space().g;
    const DivisorClass lhs = pushforward(product(psi_class(g), pullback_forgetful_to_pointed(d, 1)));
    return lhs == static_cast<long long>(2 * g - 2) * d;
}

/// π_*(π^*D·π^*D') = 0.
inline bool product_identity(const DivisorClass& d, const DivisorClass& e) {
    return pushforward(product(pullback_forgetful_to_pointed(d, 1), pullback_forgetful_to_pointed(e, 1))).is_zero();
}

inline Tally projection_psi(std::mt19937& rng, int trials, bool middle = true, int parity = -1) {
    Tally t;
    for (int k = 0; k < trials; ++k) {
        int g = random_genus(rng);
        if (parity >= 0 && g % 2 != parity) g = g == 30 ? 29 : g + 1;
        const DivisorClass d = random_class(rng, g, middle);
        t.record(psi_identity(d), "g=" + std::to_string(g) + " D=" + d.str());
    }
    return t;
}

inline Tally projection_product(std::mt19937& rng, int trials, bool middle = true, int parity = -1) {
    Tally t;
    for (int k = 0; k < trials; ++k) {
        int g = random_genus(rng);
        if (parity >= 0 && g % 2 != parity) g = g == 30 ? 29 : g + 1;
        const DivisorClass d = random_class(rng, g, middle), e = random_class(rng, g, middle);
        t.record(product_identity(d, e), "g=" + std::to_string(g));
    }
    return t;
}

/// canonicalize is idempotent and identifies (i, S) with (g-i, S^c).
inline Tally canonicalization(std::mt19937& rng, int trials) {
    Tally t;
    std::uniform_int_distribution<int> gd(1, 12), nd(0, 8);
    for (int k = 0; k < trials; ++k) {
        const ModuliSpace s{gd(rng), nd(rng)};
        if (2 * s.g - 2 + s.n <= 0) {
            --k;
            continue;
        }
        const int i = std::uniform_int_distribution<int>(0, s.g)(rng);
        const std::uint32_t marks = s.n == 0 ? 0u : std::uniform_int_distribution<std::uint32_t>(0, s.all_marks())(rng);
        const BoundaryIndex idx = BoundaryIndex::separating(i, marks);
        const BoundaryIndex comp = BoundaryIndex::separating(s.g - i, s.all_marks() & ~marks);
        try {
            const BoundaryIndex c = canonicalize(idx, s);
            bool ok = canonicalize(c, s) == c;
            if (s.n != 1) ok = ok && canonicalize(comp, s) == c;
            t.record(ok, s.str() + " " + std::to_string(i) + marks_str(marks));
        } catch (const InvalidIndex&) {
            // Unstable side; the complement must be rejected as well.
            bool rejected = false;
            try {
                canonicalize(comp, s);
            } catch (const InvalidIndex&) {
                rejected = true;
            }
            t.record(rejected || s.n == 1, "asymmetric rejection " + s.str());
        }
    }
    return t;
}

inline Tally slope_scaling(std::mt19937& rng, int trials) {
    Tally t;
    std::uniform_int_distribution<int> pos(1, 9);
    for (int k = 0; k < trials; ++k) {
        const DivisorClass d = random_class(rng, random_genus(rng, 3, 30));
        const Rational c(pos(rng), pos(rng));
        t.record(slope(c * d) == slope(d), d.str());
    }
    return t;
}

inline Tally lp_against_oracle(std::mt19937& rng, int trials) {
    using lp::Relation;
    Tally t;
    std::uniform_int_distribution<int> coef(-3, 3), nvars(1, 4), nrows(1, 5), rel(0, 2), rhs(-4, 6);
    for (int k = 0; k < trials; ++k) {
        lp::Program p;
        p.num_vars = static_cast<std::size_t>(nvars(rng));
        const int m = nrows(rng);
        for (int r = 0; r < m; ++r) {
            lp::Constraint c;
            for (std::size_t j = 0; j < p.num_vars; ++j) c.coeffs.push_back(coef(rng));
            c.rel = static_cast<Relation>(rel(rng));
            c.rhs = rhs(rng);
            p.rows.push_back(c);
        }
        for (std::size_t j = 0; j < p.num_vars; ++j) p.objective.push_back(coef(rng));
        const lp::Solution s = lp::solve(p);
        const oracle::MaxResult o = oracle::maximum(p);
        bool ok;
        if (!o.feasible)
            ok = s.status == lp::Status::Infeasible && lp::verify_farkas(p, s.dual);
        else if (o.unbounded)
            ok = s.status == lp::Status::Unbounded;
        else
            ok = s.status == lp::Status::Optimal && s.value == o.value && lp::verify_primal(p, s.x) &&
                 lp::verify_dual_bound(p, s.dual, s.value);
        t.record(ok, "trial " + std::to_string(k));
    }
    return t;
}

}  // namespace props
