#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gca {

using BigInt = boost::multiprecision::cpp_int;

/// The only scalar type in the library: an exact arbitrary-precision
/// rational, always reduced, denominator always positive. No floating
/// point exists anywhere on a computation path.
using Rational = boost::multiprecision::cpp_rational;

/// Builds n/d with full normalization (sign moved to the numerator,
/// gcd divided out). Throws std::domain_error on d == 0.
inline Rational make_rational(BigInt n, BigInt d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    // The two-argument cpp_rational constructor rejects negative
    // denominators; division normalizes both sign and gcd.
    return Rational(std::move(n)) / Rational(std::move(d));
}

/// Renders as "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
/// on anything else, std::domain_error on a zero denominator.
inline Rational rational_from_string(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto parse_int = [&](std::string_view s) -> BigInt {
        bool neg = !s.empty() && s.front() == '-';
        if (neg) s.remove_prefix(1);
        if (!is_digits(s)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        BigInt v{std::string(s)};
        if (neg) v = -v;
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

} // namespace gca
