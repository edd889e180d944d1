#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace modulislope {

/// Affine expression `c + sum_k r_k * x_k` over named unknowns with exact
/// rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality. Products are only defined when one factor is constant; the ring
/// never leaves degree one.
class LinExpr {
public:
    LinExpr() = default;
    LinExpr(const Rational& constant) : constant_(constant) {}
    LinExpr(long long constant) : constant_(constant) {}

    static LinExpr symbol(std::string name, const Rational& coefficient = Rational(1)) {
        if (!is_symbol_name(name)) throw ParseError("invalid symbol name '" + name + "'");
        LinExpr e;
        if (coefficient != 0) e.terms_.emplace(std::move(name), coefficient);
        return e;
    }

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Rational, std::less<>>& terms() const { return terms_; }

    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && constant_ == 0; }

    Rational coefficient(std::string_view name) const {
        const auto it = terms_.find(name);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Returns the constant; throws if any unknown is present.
    const Rational& value() const {
        if (!is_constant()) throw std::domain_error("expression '" + str() + "' is not constant");
        return constant_;
    }

    LinExpr& operator+=(const LinExpr& other) {
        constant_ += other.constant_;
        for (const auto& [name, c] : other.terms_) accumulate(name, c);
        return *this;
    }

    LinExpr& operator-=(const LinExpr& other) {
        constant_ -= other.constant_;
        for (const auto& [name, c] : other.terms_) accumulate(name, -c);
        return *this;
    }

    LinExpr& operator*=(const Rational& factor) {
        if (factor == 0) {
            constant_ = 0;
            terms_.clear();
            return *this;
        }
        constant_ *= factor;
        for (auto& [name, c] : terms_) c *= factor;
        return *this;
    }

    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    friend LinExpr operator-(LinExpr a) { return a *= Rational(-1); }
    friend LinExpr operator*(LinExpr a, const Rational& f) { return a *= f; }
    friend LinExpr operator*(const Rational& f, LinExpr a) { return a *= f; }
    friend LinExpr operator*(LinExpr a, long long f) { return a *= Rational(f); }
    friend LinExpr operator*(long long f, LinExpr a) { return a *= Rational(f); }

    friend LinExpr operator*(const LinExpr& a, const LinExpr& b) {
        if (a.is_constant()) return b * a.constant_;
        if (b.is_constant()) return a * b.constant_;
        throw DegreeOverflow("product of non-constant expressions '" + a.str() + "' and '" +
                             b.str() + "'");
    }

    friend bool operator==(const LinExpr&, const LinExpr&) = default;

    /// Replaces `name` by `replacement` everywhere.
    LinExpr substitute(std::string_view name, const LinExpr& replacement) const {
        const auto it = terms_.find(name);
        if (it == terms_.end()) return *this;
        LinExpr result = *this;
        const Rational c = it->second;
        result.terms_.erase(std::string(name));
        return result += replacement * c;
    }

    /// Substitutes every symbol found in `values`; others stay symbolic.
    template <class Map>
    LinExpr evaluate(const Map& values) const {
        LinExpr result(constant_);
        for (const auto& [name, c] : terms_) {
            const auto it = values.find(name);
            if (it != values.end())
                result.constant_ += c * it->second;
            else
                result.accumulate(name, c);
        }
        return result;
    }

    /// Canonical text: constant first (if nonzero), then terms in name order,
    /// e.g. "7-B5", "990*a+642*b10-6930*m", "-3/2*x".
    std::string str() const {
        std::string out;
        if (constant_ != 0 || terms_.empty()) out = to_string(constant_);
        for (const auto& [name, c] : terms_) {
            const bool negative = c < 0;
            const Rational magnitude = negative ? Rational(-c) : c;
            if (negative)
                out += '-';
            else if (!out.empty())
                out += '+';
            if (magnitude != 1) out += to_string(magnitude) + "*";
            out += name;
        }
        return out;
    }

    /// Parses the format produced by str(); also accepts terms in any order,
    /// repeated symbols, `coef*name` with coef integral or p/q, and spaces.
    static LinExpr parse(std::string_view text) {
        std::string compact;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
        if (compact.empty()) throw ParseError("empty linear expression");

        LinExpr result;
        std::size_t pos = 0;
        while (pos < compact.size()) {
            bool negative = false;
            if (compact[pos] == '+' || compact[pos] == '-') {
                negative = compact[pos] == '-';
                ++pos;
            } else if (pos != 0) {
                throw ParseError("expected sign in '" + compact + "'");
            }
            std::size_t end = pos;
            while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
            const std::string_view term(compact.data() + pos, end - pos);
            if (term.empty()) throw ParseError("empty term in '" + compact + "'");

            Rational coef = 1;
            std::string_view name;
            const auto star = term.find('*');
            if (star != std::string_view::npos) {
                coef = parse_rational(term.substr(0, star));
                name = term.substr(star + 1);
                if (!is_symbol_name(name)) throw ParseError("invalid symbol in '" + compact + "'");
            } else if (is_symbol_name(term)) {
                name = term;
            } else {
                coef = parse_rational(term);
            }
            if (negative) coef = -coef;
            if (name.empty())
                result.constant_ += coef;
            else
                result.accumulate(std::string(name), coef);
            pos = end;
        }
        return result;
    }

    static bool is_symbol_name(std::string_view name) {
        if (name.empty()) return false;
        const auto first = static_cast<unsigned char>(name.front());
        if (!(std::isalpha(first) || name.front() == '_')) return false;
        for (char ch : name) {
            const auto c = static_cast<unsigned char>(ch);
            if (!(std::isalnum(c) || std::string_view("_[]{}:,.'").find(ch) != std::string_view::npos))
                return false;
        }
        return true;
    }

private:
    void accumulate(const std::string& name, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(name, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational constant_{0};
    std::map<std::string, Rational, std::less<>> terms_;
};

}  // namespace modulislope
