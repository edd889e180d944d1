#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace modulislope {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw ParseError("invalid rational: '" + std::string(whole) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid rational: '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p" or "p/q" (optional sign on p). Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
    const Integer num = detail::parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    const Integer den = detail::parse_integer(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Decimal rendering rounded half away from zero; display only.
inline std::string to_decimal(const Rational& r, int digits) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (digits < 0) digits = 0;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer num = numerator(r);
    const Integer den = denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;
    Integer scaled = (2 * num * scale + den) / (2 * den);
    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && scaled != 0) body.insert(0, "-");
    return body;
}

inline Rational binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return Rational(result);
}

}  // namespace modulislope
