#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gca/formal_point.hpp"
#include "gca/rational.hpp"

namespace gca {

/// A canonical bracket: three distinct points in strictly increasing
/// declaration order. Brackets in any other argument order only exist
/// transiently, as (sign, canonical bracket) pairs.
struct Bracket {
    std::array<FormalPoint, 3> points;

    auto operator<=>(const Bracket&) const = default;
};

/// Result of canonicalizing an argument triple: sign is +1 or -1 for the
/// sorting permutation's parity, or 0 when an argument repeats (the
/// bracket is alternating, so the term annihilates).
struct SignedBracket {
    int sign = 0;
    Bracket bracket{};
};

inline SignedBracket normalize_bracket(FormalPoint x, FormalPoint y, FormalPoint z) {
    if (x == y || y == z || x == z) return {};
    int sign = 1;
    auto swap_if = [&](FormalPoint& a, FormalPoint& b) {
        if (b < a) {
            std::swap(a, b);
            sign = -sign;
        }
    };
    swap_if(x, y);
    swap_if(y, z);
    swap_if(x, y);
    return {sign, Bracket{{x, y, z}}};
}

/// A product of canonical brackets, stored sorted so that equal monomials
/// have identical representations. Degree = number of factors.
struct BracketMonomial {
    std::vector<Bracket> factors; // sorted

    static BracketMonomial unit() { return {}; }

    BracketMonomial times(const BracketMonomial& other) const {
        BracketMonomial out;
        out.factors.reserve(factors.size() + other.factors.size());
        std::merge(factors.begin(), factors.end(), other.factors.begin(), other.factors.end(),
                   std::back_inserter(out.factors));
        return out;
    }

    auto operator<=>(const BracketMonomial&) const = default;
};

/// A polynomial in brackets with Rational coefficients. The term map is
/// canonical: factors sorted inside each monomial, monomials ordered
/// lexicographically, no zero coefficients stored.
class BracketPolynomial {
public:
    using TermMap = std::map<BracketMonomial, Rational>;

    BracketPolynomial() = default;

    static BracketPolynomial zero() { return {}; }

    static BracketPolynomial one() { return constant(Rational(1)); }

    static BracketPolynomial constant(Rational c) {
        BracketPolynomial p;
        p.add_term(BracketMonomial::unit(), std::move(c));
        return p;
    }

    /// The normalized bracket [x y z] as a polynomial: ±1 times the
    /// canonical bracket, or zero on a repeated argument.
    static BracketPolynomial bracket(FormalPoint x, FormalPoint y, FormalPoint z) {
        const SignedBracket sb = normalize_bracket(x, y, z);
        BracketPolynomial p;
        if (sb.sign != 0) p.add_term(BracketMonomial{{sb.bracket}}, Rational(sb.sign));
        return p;
    }

    static BracketPolynomial term(Rational coefficient, BracketMonomial monomial) {
        BracketPolynomial p;
        p.add_term(std::move(monomial), std::move(coefficient));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const TermMap& terms() const { return terms_; }

    void add_term(BracketMonomial m, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BracketPolynomial& operator+=(const BracketPolynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    BracketPolynomial& operator-=(const BracketPolynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend BracketPolynomial operator+(BracketPolynomial a, const BracketPolynomial& b) { return a += b; }

    friend BracketPolynomial operator-(BracketPolynomial a, const BracketPolynomial& b) { return a -= b; }

    BracketPolynomial operator-() const {
        BracketPolynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend BracketPolynomial operator*(const BracketPolynomial& a, const BracketPolynomial& b) {
        BracketPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    friend BracketPolynomial operator*(const BracketPolynomial& a, const Rational& s) {
        BracketPolynomial out;
        if (s.is_zero()) return out;
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    friend BracketPolynomial operator*(const Rational& s, const BracketPolynomial& a) { return a * s; }

    bool operator==(const BracketPolynomial&) const = default;

private:
    TermMap terms_;
};

/// Relabels every bracket argument through sigma and re-canonicalizes.
/// This is the ring automorphism induced by permuting the points.
inline BracketPolynomial apply_permutation(const BracketPolynomial& p, const Permutation& sigma) {
    BracketPolynomial out;
    for (const auto& [monomial, coeff] : p.terms()) {
        int sign = 1;
        BracketMonomial image;
        image.factors.reserve(monomial.factors.size());
        for (const Bracket& b : monomial.factors) {
            const SignedBracket sb = normalize_bracket(sigma(b.points[0]), sigma(b.points[1]), sigma(b.points[2]));
            sign *= sb.sign;
            if (sign == 0) break;
            image.factors.push_back(sb.bracket);
        }
        if (sign == 0) continue;
        std::sort(image.factors.begin(), image.factors.end());
        out.add_term(std::move(image), coeff * Rational(sign));
    }
    return out;
}

inline std::string to_string(const Bracket& b, const PointSet& points) {
    std::string out = "[";
    for (const FormalPoint p : b.points) out += points.name(p);
    out += ']';
    return out;
}

inline std::string to_string(const BracketMonomial& m, const PointSet& points) {
    std::string out;
    for (const Bracket& b : m.factors) out += to_string(b, points);
    return out;
}

/// One rendered term: sign, then the coefficient magnitude when it is not
/// 1 (always for the bracket-free unit monomial), then the factors.
inline std::string term_to_string(const BracketMonomial& m, const Rational& c, const PointSet& points) {
    std::string out = (c < 0) ? "-" : "+";
    const Rational mag = abs(c);
    if (mag != 1 || m.factors.empty()) out += to_string(mag);
    out += to_string(m, points);
    return out;
}

/// Deterministic rendering: terms in monomial order, joined by single
/// spaces, every term carrying an explicit sign; the zero polynomial is "0".
inline std::string to_string(const BracketPolynomial& p, const PointSet& points) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) out += ' ';
        out += term_to_string(m, c, points);
    }
    return out;
}

} // namespace gca
